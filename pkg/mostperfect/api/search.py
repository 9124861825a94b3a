"""
Census API endpoints.
"""
from flask import Blueprint, current_app, jsonify, request

from mostperfect.models.search import SearchMode, SearchSpace
from mostperfect.services.search_service import SearchService
from mostperfect.utils.helpers import build_error_response, build_success_response
from mostperfect.utils.validators import validate_construction_params, validate_integer, validate_search_mode

search_bp = Blueprint('search', __name__)


@search_bp.route('/census', methods=['POST'])
def run_census():
    """POST /api/search/census - Run a whole-space census within the configured budget."""
    data = request.get_json(silent=True)

    if not data:
        return jsonify(build_error_response('VALIDATION_ERROR', 'Request body required')[0]), 400

    is_valid, params, error = validate_construction_params(
        data.get('p'), data.get('r'), current_app.config['MPS_MAX_API_ORDER']
    )
    if not is_valid:
        return jsonify(build_error_response('INVALID_PARAMETERS', error)[0]), 400

    is_valid, mode, error = validate_search_mode(data.get('mode'))
    if not is_valid:
        return jsonify(build_error_response('VALIDATION_ERROR', error)[0]), 400

    is_valid, count, error = validate_integer(data.get('count', 0), min_value=0, field_name='count')
    if not is_valid:
        return jsonify(build_error_response('VALIDATION_ERROR', error)[0]), 400

    is_valid, seed, error = validate_integer(data.get('seed', 0), min_value=0, field_name='seed')
    if not is_valid:
        return jsonify(build_error_response('VALIDATION_ERROR', error)[0]), 400

    if mode is SearchMode.RANDOM_SAMPLE and count < 1:
        return jsonify(build_error_response('VALIDATION_ERROR', 'random-sample mode needs count >= 1')[0]), 400

    budget = current_app.config['MPS_SEARCH_BUDGET']
    if mode is SearchMode.RANDOM_SAMPLE and count > budget:
        return jsonify(build_error_response('BUDGET_EXCEEDED', f'count must not exceed {budget}')[0]), 400

    space = SearchSpace(
        params=params,
        mode=mode,
        sample_count=count,
        seed=seed,
        budget=budget,
        representative_cap=current_app.config['MPS_REPRESENTATIVE_CAP'],
        algorithm=current_app.config['MPS_RANDOM_ALGORITHM'],
    )
    result = SearchService.census(space)
    current_app.logger.info(f'Census via API: {result!r}')
    return jsonify(build_success_response(result.to_dict())[0]), 200
