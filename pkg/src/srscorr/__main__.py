"""Allow ``python -m srscorr`` as an alias for the console script."""

from .cli import main

main()
