""" Subcommand groups of the fracdelay CLI. """
