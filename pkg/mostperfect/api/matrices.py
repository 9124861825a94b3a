"""
Construction matrix API endpoints.
"""
from flask import Blueprint, current_app, jsonify, request

from mostperfect.models.zp import ZpVector
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.services.construction_service import ConstructionService
from mostperfect.services.search_service import SearchService
from mostperfect.utils.helpers import build_error_response, build_success_response
from mostperfect.utils.validators import validate_construction_params, validate_object_name

matrices_bp = Blueprint('matrices', __name__)

DELTA_SOURCES = ('Ltilde', 'M')


def _params_from_request():
    return validate_construction_params(
        request.args.get('p'), request.args.get('r'), current_app.config['MPS_MAX_API_ORDER']
    )


@matrices_bp.route('/delta-search', methods=['GET'])
def delta_search():
    """GET /api/matrices/delta-search - Fully nonzero solution of X x = e_1 + e_{r+1}."""
    is_valid, params, error = _params_from_request()
    if not is_valid:
        return jsonify(build_error_response('INVALID_PARAMETERS', error)[0]), 400

    which = request.args.get('which', 'M')
    if which not in DELTA_SOURCES:
        return jsonify(build_error_response('VALIDATION_ERROR', f'which must be one of {", ".join(DELTA_SOURCES)}')[0]), 400

    delta = SearchService.find_delta(ConstructionService.build_object(params, which), params)
    return jsonify(build_success_response({
        'which': which,
        'p': params.p,
        'r': params.r,
        'found': delta is not None,
        'vector': delta.to_list() if delta is not None else None,
    })[0]), 200


@matrices_bp.route('/<which>', methods=['GET'])
def get_matrix(which):
    """GET /api/matrices/<which> - One of Lr, L, Ltilde, Lhat, M, delta."""
    is_valid, error = validate_object_name(which)
    if not is_valid:
        return jsonify(build_error_response('NOT_FOUND', error)[0]), 404

    is_valid, params, error = _params_from_request()
    if not is_valid:
        return jsonify(build_error_response('INVALID_PARAMETERS', error)[0]), 400

    built = ConstructionService.build_object(params, which)
    data = {'which': which, 'p': params.p, 'r': params.r}
    if isinstance(built, ZpVector):
        data['vector'] = built.to_list()
        data['text'] = AlgebraService.format_vector(built)
    else:
        data['rows'] = built.to_rows()
        data['text'] = AlgebraService.format_matrix(built)
    return jsonify(build_success_response(data)[0]), 200
