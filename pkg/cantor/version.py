import os
import re
import subprocess
import sys

# Version reported when neither a build stamp nor git metadata is available.
base_version = '0.1.0'

# minimum version requirements
python_min_ver = '3.6'
numpy_min_ver = '1.17'


class VersionUnavailable(Exception):
    pass


def _source_root():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def git_describe_version():
    root = _source_root()
    try:
        v = subprocess.run(
            ['git', 'describe', '--tags', '--abbrev=4'],
            cwd=root,
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            check=True,
            universal_newlines=True,
        ).stdout.strip()
    except (OSError, subprocess.CalledProcessError) as e:
        raise VersionUnavailable(str(e))
    m = re.match(r'^v([0-9].*)', v)
    if not m:
        raise VersionUnavailable('bad version: %s' % v)
    return m.group(1).replace('-', '+', 1).replace('-g', '.g')


def git_archival_version():
    archival_path = os.path.join(_source_root(), '.git_archival.txt')
    if not os.path.isfile(archival_path):
        # The archival file will not be present in sdist archives.
        raise VersionUnavailable('%s does not exist' % archival_path)
    tag_re = re.compile(r'(?<=\btag: )([^,]+)\b')
    with open(archival_path) as f:
        for line in f:
            if line.startswith('ref-names:'):
                for tag in tag_re.findall(line):
                    if tag.startswith('v'):
                        return tag[1:]
        else:
            raise VersionUnavailable('no tags found in %s' % archival_path)


def get_builtin_version():
    try:
        import cantor.builtin_version
    except ImportError:
        raise VersionUnavailable('could not import cantor.builtin_version')
    else:
        return cantor.builtin_version.version


def get_version():
    for v in [get_builtin_version, git_describe_version, git_archival_version]:
        try:
            return v()
        except VersionUnavailable:
            pass
    return base_version


def python_version():
    return '.'.join(map(str, sys.version_info[:3]))
