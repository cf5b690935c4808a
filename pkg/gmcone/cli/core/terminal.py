# -*- coding: utf-8 -*-

# This file is part of the gmcone project.
"""
Terminal output of the cli. Commands never print directly, they go through
the shared `console` so that `--silent` and `--verbose` apply everywhere.
"""
import os

from rich import box
from rich.console import Console as _Console
from rich.panel import Panel
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.style import Style
from rich.table import Table
from rich.text import Text


PASSED_MARK = '✔'
FAILED_MARK = '✖'


def get_style(fg=None, bg=None, bold=None, dim=None, italic=None):
    return Style(color=fg, bgcolor=bg, bold=bold, dim=dim, italic=italic)


def verdict(passed):
    if passed:
        return Text(PASSED_MARK, style=get_style(fg='green3'))
    return Text(FAILED_MARK, style=get_style(fg='red', bold=True))


class Console(_Console):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._silent = False
        self._verbose = False

    @property
    def silent(self):
        return self._silent

    @silent.setter
    def silent(self, value):
        self._silent = value
        self._file = open(os.devnull, 'w') if value else None

    @property
    def verbose(self):
        return self._verbose

    @verbose.setter
    def verbose(self, value):
        self._verbose = value

    def progress(self):
        """One task per checked property, hidden when silent."""
        return Progress(
            SpinnerColumn(),
            TextColumn('[progress.description]{task.description:<56}'),
            BarColumn(style='cyan', finished_style='green3'),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self,
            expand=True,
            transient=False,
            disable=self._silent,
        )

    def header(self, text, fg='dodger_blue2'):
        self.print(
            Panel(
                Text(text, justify='center', style=get_style(fg=fg)),
                box=box.ROUNDED,
            ),
        )

    def table(self, columns=None, rows=None, caption=None, expand=False):
        """
        Columns are header strings or `(justify, header)` pairs. Cells may be
        rich renderables, anything else is printed with `str`.
        """
        if not (columns and rows):
            return

        table = Table(
            box=box.ROUNDED,
            border_style='blue',
            header_style='deep_sky_blue1',
            caption=caption,
            expand=expand,
        )
        for col in columns:
            justify, header = col if isinstance(col, (tuple, list)) else ('left', col)
            table.add_column(header, justify=justify)
        for row in rows:
            table.add_row(*[item if isinstance(item, Text) else str(item) for item in row])

        self.print(table)

    def echo(self, message=''):
        self.print(message)

    def secho(self, message, fg=None, bold=None, dim=None):
        self.print(message, style=get_style(fg=fg, bold=bold, dim=dim))

    def debug(self, message):
        if self._verbose:
            self.print(message, style=get_style(dim=True))


console = Console(highlight=False)
