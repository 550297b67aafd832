"""Terminal output: reports on stdout, messages and traces on stderr.

Reports are JSON lines, CSV text or PGM bytes and go to stdout untouched.
Everything meant for a human (errors, warnings and the ``CANTOR_LOG``
traces) goes to stderr, or to the log file named in ``CANTOR_LOG``.

"""

import io
import json
import sys
import textwrap

__copyright__ = """
Copyright (C) 2007, Karl Hasselström <kha@treskal.com>
Copyright (C) 2026, The cantor-circles authors

This program is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License version 2 as
published by the Free Software Foundation.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program; if not, see http://www.gnu.org/licenses/.
"""

WIDTH = 79


def json_line(obj):
    """Serialize a report object to one deterministic JSON line.

    Keys keep their insertion order and NaN or infinite values are refused,
    so every report parses as strict JSON.

    """
    return json.dumps(obj, sort_keys=False, separators=(', ', ': '), allow_nan=False)


class _Channel:
    """A text stream that knows whether an unfinished line is pending.

    ``level`` indents every new line by two spaces per open trace step.

    """

    def __init__(self, stream):
        self._stream = stream
        self.pending = False
        self.level = 0

    def _close_pending(self):
        if self.pending:
            self._stream.write('\n')
            self.pending = False

    def line(self, text, end=True, continued=False):
        if not continued:
            self._close_pending()
        if not self.pending:
            self._stream.write('  ' * self.level)
        self._stream.write(text)
        if end:
            self._stream.write('\n')
        else:
            self._stream.flush()
        self.pending = not end

    def tagged(self, tag, msgs):
        prefix = tag + ': '
        width = WIDTH - 2 * self.level - len(prefix)
        for msg in msgs:
            for wrapped in textwrap.wrap(msg, width, break_long_words=False):
                self.line(prefix + wrapped)
                prefix = ' ' * len(prefix)

    def raw(self, data):
        self._close_pending()
        self._stream.buffer.write(data)
        self._stream.flush()


def _console(fd):
    return io.open(fd, 'w', buffering=1, encoding='utf-8')


class MessagePrinter:
    """Writes reports to stdout and messages to stderr.

    Given a ``file``, both go there instead; this is how a profile trace is
    appended to a log file.

    """

    def __init__(self, file=None):
        if file is None:
            self._report = _Channel(_console(sys.stdout.fileno()))
            self._message = _Channel(_console(sys.stderr.fileno()))
        else:
            self._report = self._message = _Channel(file)

    def stdout_json(self, obj):
        self._report.line(json_line(obj))

    def stdout_bytes(self, data):
        """Write an encoded image or CSV table to stdout as is."""
        self._report.raw(data)

    def info(self, *msgs):
        for msg in msgs:
            self._message.line(msg)

    def warn(self, *msgs, **kw):
        self._message.tagged(kw.get('title', 'Warning'), msgs)

    def error(self, *msgs, **kw):
        self._message.tagged(kw.get('title', 'Error'), msgs)

    def start(self, msg):
        """Open a trace step; its messages are indented until :meth:`done`."""
        self._message.line('%s ... ' % msg, end=False)
        self._message.level += 1

    def done(self, extramsg=None):
        self._message.level -= 1
        self._message.line(
            'done (%s)' % extramsg if extramsg else 'done', continued=True
        )


out = MessagePrinter()
