"""
Application factory and initialization.
Creates and configures the Flask application serving the JSON API.
"""
from flask import Flask, jsonify

from config import config
from mostperfect.utils.errors import MostPerfectError
from mostperfect.utils.helpers import build_error_response
from mostperfect.utils.logging import configure_logging

__version__ = '1.0.0'


def create_app(config_name='development'):
    """
    Application factory function.
    """
    app = Flask(__name__)

    # Load configuration
    app.config.from_object(config[config_name])

    configure_logging(app.config['LOG_LEVEL'], app.config['LOG_FORMAT'])

    # Register blueprints
    register_blueprints(app)

    # Register error handlers
    register_error_handlers(app)

    return app


def register_blueprints(app):
    """Register application blueprints."""
    from mostperfect.api.squares import squares_bp
    from mostperfect.api.matrices import matrices_bp
    from mostperfect.api.search import search_bp

    app.register_blueprint(squares_bp, url_prefix='/api/squares')
    app.register_blueprint(matrices_bp, url_prefix='/api/matrices')
    app.register_blueprint(search_bp, url_prefix='/api/search')


def register_error_handlers(app):
    """Register error handlers; every error uses the JSON envelope."""

    @app.errorhandler(MostPerfectError)
    def domain_error(error):
        body, status = build_error_response(error.code, error.message, error.details)
        return jsonify(body), status

    @app.errorhandler(400)
    def bad_request(error):
        return jsonify(build_error_response('BAD_REQUEST', 'Bad request', str(error))[0]), 400

    @app.errorhandler(404)
    def not_found(error):
        return jsonify(build_error_response('NOT_FOUND', 'Resource not found', str(error))[0]), 404

    @app.errorhandler(405)
    def method_not_allowed(error):
        return jsonify(build_error_response('METHOD_NOT_ALLOWED', 'Method not allowed', str(error))[0]), 405

    @app.errorhandler(413)
    def too_large(error):
        return jsonify(build_error_response('PAYLOAD_TOO_LARGE', 'Request body too large')[0]), 413

    @app.errorhandler(500)
    def internal_error(error):
        details = str(error) if app.debug else 'An error occurred'
        return jsonify(build_error_response('INTERNAL_ERROR', 'Internal server error', details)[0]), 500
