from gmcone.cli.plugins.verify.properties import (  # noqa: F401
    cone,
    foliation,
    mcg,
    teich,
    walsh,
)
