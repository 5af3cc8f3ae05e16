""" Allows the CLI to be imported as a module. """

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2
