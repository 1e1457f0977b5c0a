import sys


class Progress:
    """
    Tally for a batch of checks. Counts finished and flagged items and writes a percent-complete line to stderr
    whenever the percentage reaches a new multiple of the increment.
    """

    def __init__(self, total, report_increment=1, stream=None, line="  ... %s%% complete.\r"):
        """
        :param total: Number of items in the batch; advance() is called once per item
        :param report_increment: Only percentages divisible by this are written
        :param stream: Where the percentage goes (default sys.stderr)
        :param line: Format of one percentage line, %s marks the number
        """
        self.total = total
        self.done = 0
        self.flagged = 0
        self._increment = report_increment
        self._stream = stream
        self._line = line
        self._shown = 0

    def advance(self, flagged=False):
        """
        Counts one more finished item.

        :param flagged: The item failed its check
        """
        self.done += 1
        if flagged:
            self.flagged += 1
        percent = 100 * self.done // max(self.total, 1)
        if percent != self._shown and percent % self._increment == 0:
            stream = self._stream or sys.stderr
            stream.write(self._line % percent)
            stream.flush()
            self._shown = percent

    @property
    def clean(self):
        return self.flagged == 0
