import abc


class Renderer(object):
    """ A report row renderer.
    """

    def __init__(self, row=None):
        self.row = row

    @abc.abstractmethod
    def to_rst(self, **kwargs):
        """ Outputs the `row` in rst.

        Subclasses need to override the method. The signature of the method
        should hold only keyword arguments which always have default values.

        Returns
        -------
        lines : list
            A list of string lines rendered in rst.

        """
