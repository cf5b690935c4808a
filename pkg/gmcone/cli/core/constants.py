# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import os


DEFAULT_CONFIG_DIR = os.path.join(os.path.expanduser('~'), '.gmcli')
CONFIG_FILE_NAME = 'config.toml'

DEFAULT_TRUNCATION = 50
DEFAULT_TOLERANCE = 1e-9
DEFAULT_SAMPLES = 4096
DEFAULT_TRIALS = 500
DEFAULT_SEED = 0

REPORT_SCHEMA_VERSION = 1
CSV_SIGNIFICANT_DIGITS = 17

PLUGINS_ENTRYPOINT_GROUP = 'gmcone.cli.plugins'
BUILTIN_PLUGINS_PREFIX = 'gmcone.cli.plugins.'
BUILTIN_PLUGINS = {
    'verify': 'gmcone.cli.plugins.verify.commands:get_command',
    'pair': 'gmcone.cli.plugins.pair.commands:get_command',
    'converge': 'gmcone.cli.plugins.converge.commands:get_command',
    'plot': 'gmcone.cli.plugins.plot.commands:get_command',
}
