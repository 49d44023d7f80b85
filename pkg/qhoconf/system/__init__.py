# pylint: disable=

"""
Verification System Module
--------------------------

This module contains the verification system class, the command line entry point.
"""

import io
import sys

from qhoconf.console import TABLES, print_values, write_table
from qhoconf.debugging import ModuleLogger, set_debug, qhoconf_debug, get_loggers, iso_now
from qhoconf.define import ConfigInvalid, UnknownIdentity, OutputError
from qhoconf.verification.suite import run_suite, run_identity

from .config.parser import FullArgumentParser
from .version import __program__


ModuleLogger(level='INFO')


# exit codes
EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_ERROR = 3


@qhoconf_debug(formatter='%(levelname)s:system: %(message)s')
class VerificationSystem(object):
    # pylint: disable=unused-argument, no-self-use, broad-except
    """
    This class parses the command line, runs one command and exits with its status.
    """

    stdin = None
    stdout = None
    stderr = None

    def __init__(self, argv=None, stdin=sys.stdin, stdout=sys.stdout, stderr=sys.stderr, exit=True):
        # pylint: disable=redefined-builtin, too-many-arguments
        """
        This function initializes the verification system and runs the requested command.

        :param argv: command line arguments, defaults to sys.argv[1:]
        :param stdin: define stdin
        :param stdout: define stdout (data stream)
        :param stderr: define stderr (diagnostic stream)
        :param exit: call sys.exit when done
        :return: None
        """

        self._debug('__init__ %r', argv)

        self.exit_code = EXIT_PASSED
        self.exit_on_finish = exit
        self.result = None

        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr

        # collect allowed commands
        self.commands = tuple(
            attribute[3:] for attribute in dir(self) if attribute.startswith('do_')
        )

        try:
            # parse parameters
            config_args = FullArgumentParser(
                commands=self.commands,
                description=__program__,
            ).parse_args(argv)

            # set initial logger config
            self.log_sink = set_debug(
                args=config_args.arg_object,
                stream=self.stderr,
            )

            # print info message
            self._info('starting at %s' % iso_now())

            # validate parsed parameters
            config = config_args.update()

            self._debug('   - config: %r', config)

            # execute command
            self.exit_code = getattr(self, 'do_%s' % config.command)(config)

        except (ConfigInvalid, UnknownIdentity, OutputError) as error:
            self.stderr.write('error: %s\n' % error)
            self.stderr.flush()
            self.exit_code = EXIT_INVALID

        except Exception as error:
            self._exception('an error has occurred: %s', error)
            self.stderr.write('error: %s\n' % error)
            self.stderr.flush()
            self.exit_code = EXIT_ERROR

        finally:
            self._debug('done')

        self.exit(self.exit_code)

    def exit(self, code=0):
        """
        This function exits the system.

        :param code: exit code
        :return: None
        """

        self.exit_code = code

        # print info message
        self._info('shutting down at %s' % iso_now())

        if self.exit_on_finish:
            sys.exit(self.exit_code)

    def emit(self, config, text):
        """
        This function writes a result to --out or to stdout.

        :param config: CliConfig
        :param text: result text
        :return: None
        """

        if config.out is None:
            self.stdout.write(text)
            self.stdout.flush()
            return

        try:
            with open(config.out, 'w', newline='', encoding='utf-8') as stream:
                stream.write(text)

        except OSError as error:
            raise OutputError('cannot write %s: %s' % (config.out, error.strerror or error))

        self._info('written to %s', config.out)

    def render(self, config, suite, verbose=False):
        """
        This function serializes a suite report in the requested format.

        :param config: CliConfig
        :param suite: SuiteReport
        :param verbose: include every detail in text
        :return: text
        """

        if config.output_format == 'json':
            return suite.to_json()

        return suite.to_text(verbose)

    def do_verify(self, config):
        """
        This function runs every registered identity.

        :param config: CliConfig
        :return: exit code
        """

        if config.target is not None:
            raise ConfigInvalid('verify takes no argument, got %r' % config.target)

        self.result = run_suite(config)
        self.emit(config, self.render(config, self.result))

        return EXIT_FAILED if self.result.failures else EXIT_PASSED

    def do_check(self, config):
        """
        This function runs one identity with verbose intermediate values.

        :param config: CliConfig
        :return: exit code
        """

        if config.target is None:
            raise ConfigInvalid('check needs an identity name')

        self.result = run_identity(config, config.target)
        self.emit(config, self.render(config, self.result, verbose=True))

        return EXIT_FAILED if self.result.failures else EXIT_PASSED

    def do_tabulate(self, config):
        """
        This function writes a CSV table for plotting.

        :param config: CliConfig
        :return: exit code
        """

        if config.target is None:
            raise ConfigInvalid('tabulate needs a table name')

        if config.target not in TABLES:
            raise ConfigInvalid('unknown table %r, choose from: %s' % (config.target, ', '.join(TABLES)))

        if config.out is None:
            write_table(config, config.target, self.stdout)
            self.stdout.flush()
            return EXIT_PASSED

        # render before opening so a failing table leaves no file behind
        buffer = io.StringIO()
        rows = write_table(config, config.target, buffer)

        try:
            with open(config.out, 'w', newline='', encoding='utf-8') as stream:
                stream.write(buffer.getvalue())

        except OSError as error:
            raise OutputError('cannot write %s: %s' % (config.out, error.strerror or error))

        self._info('%i rows written to %s', rows, config.out)

        return EXIT_PASSED

    def do_buggers(self, config):
        """
        This function lists all loggers with their description.

        :param config: CliConfig
        :return: exit code
        """

        values = [('Name', 'Description')]

        for logger in get_loggers('qhoconf'):
            module_name, _, obj_name = logger.rpartition('.')
            description = None

            # get description
            if logger in sys.modules:
                description = sys.modules[logger].__doc__

            elif module_name in sys.modules and hasattr(sys.modules[module_name], obj_name):
                description = getattr(getattr(sys.modules[module_name], obj_name), '__doc__', None)

            if not description:
                description = '-'

            else:
                if '---\n' in description:
                    description = description.rpartition('---\n')[-1]

                lines = [line.strip() for line in description.split('\n') if line.strip()]
                description = lines[0] if lines else '-'

            values.append((logger, description))

        print_values(values, self.stdout)

        return EXIT_PASSED
