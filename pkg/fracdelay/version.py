""" fracdelay version """

from importlib.metadata import PackageNotFoundError, version


def get_version():
    """ Get the version of fracdelay """
    try:
        return version("fracdelay")
    except PackageNotFoundError:
        return "unknown"


__version__ = get_version()
