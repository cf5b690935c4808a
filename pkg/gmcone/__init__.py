# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
from importlib.metadata import version


try:
    __version__ = version('gmcone-cli')
except Exception:  # pragma: no cover
    __version__ = '0.0.0'


def get_version():
    return __version__
