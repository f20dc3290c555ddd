from .cli import cli, main
from .cli_helper import InvertMLCLIHelper

__all__ = ['cli', 'main', 'InvertMLCLIHelper']
