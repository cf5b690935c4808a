# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
import sys

import click

from gmcone.cli.core.base import cli
from gmcone.cli.core.plugins import load_plugins


def main():
    exit_code = 0
    try:
        load_plugins(cli)
        result = cli(prog_name='gmcli', standalone_mode=False)
        if isinstance(result, int):
            exit_code = result
    except click.exceptions.Exit as ex:
        exit_code = ex.exit_code
    except click.ClickException as ce:
        click.secho(ce.format_message(), fg='red')
        exit_code = ce.exit_code
    except click.exceptions.Abort:
        exit_code = 1
    sys.exit(exit_code)


if __name__ == '__main__':
    main()  # pragma: no cover
