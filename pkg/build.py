#!/usr/bin/env python3
import optparse
import os
import sys

import cantor.main
import cantor.version
from cantor import argparse, commands


def main():
    op = optparse.OptionParser()
    op.add_option(
        '--cantor-version',
        action='store_true',
        help='Print cantor version',
    )
    op.add_option(
        '--asciidoc',
        metavar='CMD',
        help='Print asciidoc documentation for a command',
    )
    op.add_option(
        '--commands',
        action='store_true',
        help='Print list of all cantor subcommands',
    )
    op.add_option(
        '--cmd-list',
        action='store_true',
        help='Print asciidoc command list',
    )
    op.add_option(
        '--schemas',
        action='store_true',
        help='Print the JSON schema of every reporting subcommand',
    )
    options, args = op.parse_args()
    if args:
        op.error('Wrong number of arguments')
    if options.cantor_version:
        print(cantor.version.get_version())
    elif options.asciidoc:
        argparse.write_asciidoc(cantor.main.commands[options.asciidoc], sys.stdout)
    elif options.commands:
        for cmd, _, _, _ in commands.get_commands():
            print(cmd)
    elif options.cmd_list:
        commands.asciidoc_command_list(commands.get_commands(), sys.stdout)
    elif options.schemas:
        # Image writers have no schema.
        for cmd, _, _, _ in commands.get_commands():
            path = commands.schema_path(cmd)
            if os.path.exists(path):
                print('%s %s' % (cmd, os.path.relpath(path)))
    else:
        op.error('No command')


if __name__ == '__main__':
    if os.environ.get('COVERAGE_PROCESS_START'):
        import coverage

        cov = coverage.process_startup()
        cov.switch_context('build')

    main()
