"""
aptgame Command-Line Module
"""

from .output import Table, CommandOutput, emit, metadata_line, to_json, write_csv
from .commands import COMMANDS
from .reproduce import TARGETS, cmd_reproduce
from .main import build_parser, main, run

__all__ = [
    'Table',
    'CommandOutput',
    'emit',
    'metadata_line',
    'to_json',
    'write_csv',
    'COMMANDS',
    'TARGETS',
    'cmd_reproduce',
    'build_parser',
    'main',
    'run',
]
