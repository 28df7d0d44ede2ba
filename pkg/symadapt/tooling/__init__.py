__all__ = [
    'RunConfig',
    'build_config',
    'load_config',
    'main']

from symadapt.tooling.config import RunConfig, build_config, load_config
from symadapt.tooling.cli import main
