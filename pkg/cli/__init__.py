# Command-line front end
from cli.commands import EXIT_EXHAUSTED, EXIT_OK, EXIT_USAGE, build_parser, main, run
