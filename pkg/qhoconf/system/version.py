# pylint: disable=broad-except

"""
Conformal Oscillator Version Module
-----------------------------------

This module builds the version text including git information when available.
"""

import subprocess


__author__ = 'qhoconf developers'
__program__ = 'Conformal Oscillator Verification'
__version__ = (0, 1, 0)


def create_version(version):
    """
    This function creates the version string and the git information.

    :param version: version tuple
    :return: full_version, git_info
    """

    version_text = 'v%s' % '.'.join(str(part) for part in version)

    try:
        git_commit = subprocess.check_output(
            ['git', 'rev-parse', 'HEAD'],
            stderr=subprocess.STDOUT,
        ).decode().strip()
        git_changes = 'modified' in subprocess.check_output(
            ['git', 'status'],
            stderr=subprocess.STDOUT,
        ).decode()

    except Exception:
        git_commit = None

    # pack git information
    git = (git_commit,)

    if git_commit is not None:
        git += (git_changes,)

    # return full version and git information
    return version_text, git


__version__, __git_info__ = create_version(__version__)


VERSION_TEXT = None


def get_version():
    # pylint: disable=global-statement
    """
    This function returns the version text.

    :return: version text
    """

    global VERSION_TEXT

    # check if version was created
    if VERSION_TEXT is not None:
        return VERSION_TEXT

    version = str(__version__)

    # specify version
    if len(__git_info__) > 1:
        git_commit = __git_info__[0][:6]
        if __git_info__[1]:
            git_commit += '-post'
        version += ' (commit: %s)' % git_commit

    # store version
    VERSION_TEXT = '%s by %s: %s' % (__program__, __author__, version)

    return VERSION_TEXT
