from symadapt.renderers.renderer import Renderer


class TableRow(Renderer):
    """ Render a Row as a line of an rst simple table.

    """

    def to_rst(self, columns=()):
        """ Outputs the row in rst as a line in a table.

        Arguments
        ---------
        columns : tuple
            The column widths. Text columns are left aligned and numbers
            right aligned; cells are never clipped.

        Example
        -------

        >>> row = Row(('0', '(2, 0.0)', '-8.2889385'), (False, False, True))
        >>> TableRow(row).to_rst(columns=(5, 8, 14))
        ['    0  (2, 0.0)  **-8.2889385**']

        """
        cells = []
        for text, width in zip(self.row.texts, columns):
            if _is_number(text.strip('*')):
                cells.append('{0:>{1}}'.format(text, width))
            else:
                cells.append('{0:<{1}}'.format(text, width))
        return ['  '.join(cells).rstrip()]


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True
