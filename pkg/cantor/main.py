"""Cantor circle combinatorics, dimensions and renderings"""

import os
import sys
import traceback

import cantor.commands
from cantor import argparse, utils
from cantor.out import out
from cantor.trace import finish_logging

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


#
# The commands map
#
class Commands(dict):
    """Commands class. It performs on-demand module loading"""

    def canonical_cmd(self, key):
        """Return the canonical name for a possibly-shortened command name."""
        candidates = [cmd for cmd in self if cmd.startswith(key)]

        if not candidates:
            out.error(
                'Unknown command: %s' % key,
                'Try "%s help" for a list of supported commands' % prog,
            )
            sys.exit(utils.CANTOR_VALIDATION_ERROR)
        elif len(candidates) == 1:
            return candidates[0]
        elif key in candidates:
            return key
        else:
            out.error(
                'Ambiguous command: %s' % key,
                'Candidates are: %s' % ', '.join(sorted(candidates)),
            )
            sys.exit(utils.CANTOR_VALIDATION_ERROR)

    def __getitem__(self, key):
        cmd_mod = self.get(key) or self.get(self.canonical_cmd(key))
        return cantor.commands.get_command(cmd_mod)


cmd_list = cantor.commands.get_commands()
commands = Commands((cmd, mod) for cmd, mod, _, _ in cmd_list)
prog = 'cantor'


def print_help():
    print('usage: %s <command> [options]' % os.path.basename(sys.argv[0]))
    print()
    print('Generic commands:')
    print('  help        print the detailed command usage')
    print('  version     display version information')
    print('  copyright   display copyright information')
    print()
    cantor.commands.pretty_command_list(cmd_list, sys.stdout)


def _main(argv):
    global prog

    prog = os.path.basename(argv[0])

    if len(argv) < 2:
        print('usage: %s <command>' % prog, file=sys.stderr)
        print(
            '  Try "%s --help" for a list of supported commands' % prog, file=sys.stderr
        )
        return utils.CANTOR_VALIDATION_ERROR

    cmd = argv[1]

    if cmd in ['-h', '--help']:
        if len(argv) >= 3:
            cmd = commands.canonical_cmd(argv[2])
            argv[2] = '--help'
        else:
            print_help()
            return utils.CANTOR_SUCCESS
    if cmd == 'help':
        if len(argv) == 3 and argv[2] not in ['-h', '--help']:
            cmd = commands.canonical_cmd(argv[2])
            parser = argparse.make_option_parser(commands[cmd])
            print(parser.format_help(), end='')
        else:
            print_help()
        return utils.CANTOR_SUCCESS
    if cmd in ['-v', '--version', 'version']:
        from cantor.version import get_version, python_version

        import numpy

        print('cantor %s' % get_version())
        print('numpy version %s' % numpy.__version__)
        print('Python version %s' % python_version())
        return utils.CANTOR_SUCCESS
    if cmd in ['copyright']:
        print(__copyright__)
        return utils.CANTOR_SUCCESS

    # re-build the command line arguments
    cmd = commands.canonical_cmd(cmd)
    args = argv[2:]

    # These modules are only used from this point onwards and do not
    # need to be imported earlier
    from configparser import Error as ConfigParserError
    from optparse import OptionValueError

    from cantor.exception import CantorException

    try:
        debug_level = int(os.environ.get('CANTOR_DEBUG_LEVEL', 0))
    except ValueError:
        out.error('Invalid CANTOR_DEBUG_LEVEL environment variable')
        return utils.CANTOR_VALIDATION_ERROR

    try:
        command = commands[cmd]
        parser = argparse.make_option_parser(command)
        (options, args) = parser.parse_args(args)
        ret = command.func(parser, options, args)
    except CantorException as err:
        if debug_level > 0:
            traceback.print_exc(file=sys.stderr)
        out.error('%s: %s' % (err.code, err), title='%s %s' % (prog, cmd))
        return err.exit_code
    except (IOError, ConfigParserError, OptionValueError) as err:
        # A bad configured default fails while the parser fills in defaults.
        if debug_level > 0:
            traceback.print_exc(file=sys.stderr)
        code = 'IOError' if isinstance(err, IOError) else 'ConfigError'
        out.error('%s: %s' % (code, err), title='%s %s' % (prog, cmd))
        return utils.CANTOR_VALIDATION_ERROR
    except SystemExit as e:
        # Triggered by the option parser when it finds bad commandline
        # parameters, or by --help.
        return utils.CANTOR_SUCCESS if e.code == 0 else utils.CANTOR_VALIDATION_ERROR
    except KeyboardInterrupt:
        return utils.CANTOR_VALIDATION_ERROR
    except BaseException:
        out.error('Unhandled exception:')
        traceback.print_exc(file=sys.stderr)
        return utils.CANTOR_BUG_ERROR

    return ret or utils.CANTOR_SUCCESS


def main(argv=None):
    """Run the command line and return the exit code.

    When called without ``argv`` (the console script entry point) the
    process exits with that code instead.

    """
    standalone = argv is None
    argv = list(sys.argv if standalone else argv)

    try:
        if sys.version_info[:2] < (3, 6):
            sys.stderr.write('cantor requires Python >= 3.6\n')
            sys.exit(1)

        if os.environ.get('COVERAGE_PROCESS_START'):
            import coverage

            if len(argv) < 2 or argv[1].startswith('-'):
                context = 'cantor'
            else:
                context = 'cantor-' + argv[1]

            cov = coverage.process_startup()
            cov.switch_context(context)

        try:
            ret = _main(argv)
        except SystemExit as e:
            # canonical_cmd() reports unknown and ambiguous commands this way
            ret = e.code
    finally:
        finish_logging()

    if standalone:
        sys.exit(ret)
    return ret


if __name__ == '__main__':
    main()
