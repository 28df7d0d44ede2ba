from collections import namedtuple


class Row(namedtuple('Row', ['cells', 'emphasis'])):
    """ One row of a report table.

    Attributes
    ----------
    cells : tuple
        The cell texts.

    emphasis : tuple
        One flag per cell; flagged cells are rendered in bold.

    """

    def __new__(cls, cells, emphasis=None):
        cells = tuple(str(cell) for cell in cells)
        if emphasis is None:
            emphasis = (False,) * len(cells)
        emphasis = tuple(bool(flag) for flag in emphasis)
        if len(emphasis) != len(cells):
            raise ValueError('one emphasis flag per cell is needed')
        return super(Row, cls).__new__(cls, cells, emphasis)

    @property
    def texts(self):
        """ The cells with rst markup applied.

        """
        return tuple(
            '**{0}**'.format(cell) if flag and cell else cell
            for cell, flag in zip(self.cells, self.emphasis))


def max_cell_length(rows, column):
    """ Find the max rendered length of a column in a list of Rows.

    """
    return max([len(row.texts[column]) for row in rows])
