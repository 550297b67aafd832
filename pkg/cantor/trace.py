"""Debug and profile logging of long-running computations.

The ``CANTOR_LOG`` environment variable selects a mode, optionally followed by
a file to append the log to::

    CANTOR_LOG=debug            # log every traced step and its parameters
    CANTOR_LOG=profile:log.txt  # also time every step, summarize on exit

"""

import datetime
import io
import os

from cantor.out import MessagePrinter, out

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


def get_log_mode(spec):
    if ':' not in spec:
        spec += ':'
    (log_mode, outfile) = spec.split(':', 1)
    all_log_modes = ['debug', 'profile']
    if log_mode and log_mode not in all_log_modes:
        out.warn(
            ('Unknown log mode "%s" specified in $CANTOR_LOG.' % log_mode),
            'Valid values are: %s' % ', '.join(all_log_modes),
        )
        log_mode = ''
    if outfile:
        f = MessagePrinter(io.open(outfile, 'a', encoding='utf-8'))
    else:
        f = out
    return (log_mode, f)


_log_mode, _logfile = get_log_mode(os.environ.get('CANTOR_LOG', ''))
_log_starttime = datetime.datetime.now()
_log_tracedtime = 0.0


def duration(t1, t2):
    d = t2 - t1
    return 86400 * d.days + d.seconds + 1e-6 * d.microseconds


def finish_logging():
    if _log_mode != 'profile':
        return
    ttime = duration(_log_starttime, datetime.datetime.now()) or 1e-9
    rtime = ttime - _log_tracedtime
    _logfile.info(
        'Total time: %1.3f s' % ttime,
        'Time spent in traced steps: %1.3f s (%1.1f%%)'
        % (_log_tracedtime, 100 * _log_tracedtime / ttime),
        'Remaining time: %1.3f s (%1.1f%%)' % (rtime, 100 * rtime / ttime),
    )


class Traced:
    """Context manager logging one computation step.

    Nested steps are indented by the underlying :class:`MessagePrinter`. Only
    the outermost steps count towards the traced total of the profile
    summary.

    """

    _depth = 0

    def __init__(self, desc, **params):
        self._desc = desc
        self._params = params

    def __enter__(self):
        if not _log_mode:
            return self
        _logfile.start(self._desc)
        if _log_mode == 'debug':
            for k in sorted(self._params):
                _logfile.info('%s: %s' % (k, self._params[k]))
        self._starttime = datetime.datetime.now()
        Traced._depth += 1
        return self

    def __exit__(self, exc_type, exc_value, tb):
        global _log_tracedtime
        if not _log_mode:
            return False
        Traced._depth -= 1
        n = datetime.datetime.now()
        d = duration(self._starttime, n)
        if exc_type is not None:
            _logfile.done('failed: %s' % exc_type.__name__)
        elif _log_mode == 'debug':
            _logfile.done()
        else:
            _logfile.done('%1.3f s' % d)
            _logfile.info(
                'Time since program start: %1.3f s' % duration(_log_starttime, n)
            )
        if Traced._depth == 0:
            _log_tracedtime += d
        return False
