"""
Services package.
Algebra, encoding, construction, verification and census logic, separated from the CLI and routes.
"""
