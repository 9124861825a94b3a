"""
Application entry point.
Run this file to start the JSON API on the Flask development server.
"""
import os
from mostperfect import create_app

# MPS_ENV, then FLASK_ENV, then development
env = os.getenv('MPS_ENV') or os.getenv('FLASK_ENV', 'development')
app = create_app(env)

if __name__ == '__main__':
    host = os.getenv('FLASK_HOST', '127.0.0.1')
    port = int(os.getenv('FLASK_PORT', 5000))
    debug = os.getenv('FLASK_DEBUG', 'True').lower() == 'true'

    app.logger.info(f'Starting mostperfect API in {env} mode on http://{host}:{port}')

    app.run(host=host, port=port, debug=debug)
