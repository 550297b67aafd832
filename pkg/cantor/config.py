"""Handles the cantor configuration files."""

import configparser
import os

from cantor.exception import ValidationException

__copyright__ = """
Copyright (C) 2005, Catalin Marinas <catalin.marinas@gmail.com>
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

DEFAULTS = [
    ('cantor.alpha', ['0.1']),
    ('cantor.depth', ['24']),
    ('cantor.grid', ['128x512']),
    ('cantor.maxiter', ['200']),
    ('cantor.samples', ['1024']),
    ('cantor.size', ['1024']),
    ('cantor.tau', ['1e-4']),
    ('cantor.threads', ['0']),
    ('cantor.trapsteps', ['32']),
]

# Environment variables that override a configuration key.
ENVIRONMENT = [
    ('CANTOR_THREADS', 'cantor.threads'),
]

SECTION = 'cantor'


class ConfigError(ValidationException):
    pass


def config_files():
    """Return the configuration files in increasing order of priority."""
    files = ['/etc/cantorrc', os.path.join(os.path.expanduser('~'), '.cantorrc')]
    extra = os.environ.get('CANTOR_CONFIG')
    if extra:
        files.append(extra)
    return files


class CantorConfig:

    _cache = None

    def __init__(self, files=None, environ=None):
        self._files = files
        self._environ = environ

    def load(self):
        """Load the configuration in _cache unless it has been done already.

        Values from later files shadow earlier ones; a key may appear in several
        sources and :meth:`get` returns the last one. Unreadable files are skipped
        but malformed ones raise :class:`configparser.ParsingError`.

        """
        if self._cache is not None:
            return
        cache = {key: list(value) for key, value in DEFAULTS}
        parser = configparser.ConfigParser(interpolation=None)
        files = self._files if self._files is not None else config_files()
        parser.read(files, encoding='utf-8')
        if parser.has_section(SECTION):
            for key, value in parser.items(SECTION):
                cache.setdefault('%s.%s' % (SECTION, key), []).append(value)
        environ = self._environ if self._environ is not None else os.environ
        for var, key in ENVIRONMENT:
            value = environ.get(var)
            if value is not None:
                cache.setdefault(key, []).append(value)
        self._cache = cache

    def get(self, name):
        self.load()
        try:
            return self._cache[name][-1]
        except KeyError:
            return None

    def getint(self, name):
        value = self.get(name)
        if value is None:
            return None
        try:
            return int(value)
        except ValueError:
            raise ConfigError('Value for "%s" is not an integer: "%s"' % (name, value))

    def getfloat(self, name):
        value = self.get(name)
        if value is None:
            return None
        try:
            return float(value)
        except ValueError:
            raise ConfigError('Value for "%s" is not a number: "%s"' % (name, value))

    def getbool(self, name):
        """Report the canonicalized boolean value for a given key."""
        value = self.get(name)
        if value is None:
            return None
        elif value in ['yes', 'on', 'true']:
            return True
        elif value in ['no', 'off', 'false', '']:
            return False
        elif value.isdigit():
            return bool(int(value))
        else:
            raise ConfigError('Value for "%s" is not a boolean: "%s"' % (name, value))

    def getthreads(self):
        """Return the worker count, resolving 0 to the number of CPUs."""
        threads = self.getint('cantor.threads')
        if threads < 0:
            raise ConfigError('Value for "cantor.threads" is negative: %d' % threads)
        if threads == 0:
            threads = os.cpu_count() or 1
        return threads

    def set(self, name, value):
        """Override a key for the rest of this process."""
        self.load()
        self._cache.setdefault(name, []).append(value)


config = CantorConfig()
