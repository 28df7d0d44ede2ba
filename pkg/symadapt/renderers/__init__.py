__all__ = [
    'Renderer',
    'Row',
    'TableRow',
    'get_column_lengths',
    'simple_table',
    'spectrum_table',
    'term_count_table']

from symadapt.renderers.renderer import Renderer
from symadapt.renderers.row import Row
from symadapt.renderers.table_row import TableRow
from symadapt.renderers.tables import (
    get_column_lengths, simple_table, spectrum_table, term_count_table)
