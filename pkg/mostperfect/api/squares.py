"""
Square API endpoints.
"""
from flask import Blueprint, Response, current_app, jsonify, request

from mostperfect.models.square import Square
from mostperfect.services.construction_service import ConstructionService
from mostperfect.services.square_service import SquareService
from mostperfect.services.verifier_service import VerifierService
from mostperfect.utils.helpers import build_error_response, build_success_response
from mostperfect.utils.validators import (
    validate_construction_params, validate_format, validate_grid_payload, validate_integer,
)

squares_bp = Blueprint('squares', __name__)

TEXT_MIMETYPES = {'grid': 'text/plain', 'csv': 'text/csv'}


@squares_bp.route('/generate', methods=['GET'])
def generate_square():
    """GET /api/squares/generate - Build the square of M for (p, r)."""
    is_valid, params, error = validate_construction_params(
        request.args.get('p'), request.args.get('r'), current_app.config['MPS_MAX_API_ORDER']
    )
    if not is_valid:
        return jsonify(build_error_response('INVALID_PARAMETERS', error)[0]), 400

    is_valid, fmt, error = validate_format(request.args.get('format', 'json'))
    if not is_valid:
        return jsonify(build_error_response('VALIDATION_ERROR', error)[0]), 400

    is_valid, offset, error = validate_integer(request.args.get('offset', 0), min_value=0, max_value=1,
                                               field_name='offset')
    if not is_valid:
        return jsonify(build_error_response('VALIDATION_ERROR', error)[0]), 400

    square = SquareService.build_square(ConstructionService.build_M(params), params)
    current_app.logger.info(f'Generated square of order {params.n} (p={params.p}, r={params.r})')

    if fmt in TEXT_MIMETYPES:
        return Response(SquareService.serialize(square, fmt, offset), mimetype=TEXT_MIMETYPES[fmt])

    data = params.to_dict()
    data['grid'] = (square.grid + offset).tolist()
    return jsonify(build_success_response(data)[0]), 200


@squares_bp.route('/verify', methods=['POST'])
def verify_square():
    """POST /api/squares/verify - Property report for an arbitrary grid."""
    data = request.get_json(silent=True)

    if not data:
        return jsonify(build_error_response('VALIDATION_ERROR', 'Request body required')[0]), 400

    grid = data.get('grid')
    is_valid, error = validate_grid_payload(grid)
    if not is_valid:
        return jsonify(build_error_response('MALFORMED_SQUARE', error)[0]), 400

    max_order = current_app.config['MPS_MAX_API_ORDER']
    if len(grid) > max_order:
        return jsonify(build_error_response('VALIDATION_ERROR', f'Order {len(grid)} exceeds the limit of {max_order}')[0]), 400

    is_valid, type_p, error = validate_integer(data.get('p'), min_value=2, field_name='p')
    if not is_valid:
        return jsonify(build_error_response('INVALID_PARAMETERS', error)[0]), 400

    report = VerifierService.verify_full(Square(grid), type_p)
    return jsonify(build_success_response(report.to_dict())[0]), 200
