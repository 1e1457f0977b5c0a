class RsColourError(Exception):
    """
    Base class of every error this package raises on purpose.
    """


class InputError(RsColourError, ValueError):
    """
    The caller handed us something the operation cannot accept (a self-loop, a vertex out of range, a colouring for
    another graph, a partition that isn't one, ...).
    """


class FormatError(InputError):
    """
    A malformed input file. Carries the file path and the 1-based line number so that the command line can point
    straight at the offending line.
    """

    def __init__(self, path, line, message):
        """
        :param path: The path of the file being read (or "<string>" for in-memory input)
        :param line: 1-based line number, or None when the problem is not tied to a single line
        :param message: What is wrong with it
        """
        self.path = path
        self.line = line
        self.message = message
        super(FormatError, self).__init__(str(self))

    def __str__(self):
        if self.line is None:
            return "%s: %s" % (self.path, self.message)
        return "%s:%d: %s" % (self.path, self.line, self.message)


class NotChordalError(InputError):
    """
    The chordal 3-rs tester was given a graph with an induced cycle of length four or more.
    """


class BudgetExceeded(RsColourError):
    """
    An exact search ran out of nodes or wall-clock time before it could answer.
    """

    def __init__(self, message, nodes=0):
        self.nodes = nodes
        super(BudgetExceeded, self).__init__(message)
