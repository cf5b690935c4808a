from gmcone.cli.core.base import command  # noqa: F401
