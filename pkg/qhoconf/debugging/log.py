# pylint: disable=bare-except, broad-except, too-few-public-methods

"""
Debugging Log Module
--------------------

This module contains the formatter and the handler shared by all loggers of the verification system.
"""

import io
import threading
import traceback
import sys
from logging import Formatter, BASIC_FORMAT, Handler
from logging.handlers import RotatingFileHandler


class DebugContents(object):
    """
    This class marks objects whose contents are expanded below a log message.
    """

    _debug_contents = ()

    def debug_contents(self, indent=1, file=sys.stderr):
        """
        This function writes the listed attributes of the object.

        :param indent: indentation level
        :param file: output stream
        :return: None
        """

        for attr in self._debug_contents:
            file.write('%s%s = %r\n' % ('    ' * indent, attr, getattr(self, attr, None)))


class LoggingFormatter(Formatter):
    """
    This class is a wrapper for logging formatter to support coloring.
    """

    def __init__(self, fmt=None, color=None):
        """
        This function initializes the color.

        :param fmt: format string
        :param color: color number
        :return: None
        """

        Formatter.__init__(self, fmt if fmt is not None else BASIC_FORMAT, None)

        # check the color
        if color is not None:
            if color not in range(8):
                raise ValueError('colors are 0 (black) through 7 (white)')

        # store color
        self.color = color

    def format(self, record):
        """
        This function formats the message.

        :param record: logging record
        :return: message text
        """

        try:
            # use the basic formatting
            sio = io.StringIO()
            sio.write(Formatter.format(self, record) + '\n')

            # look for detailed arguments
            for arg in record.args or ():
                if isinstance(arg, DebugContents):
                    sio.write('   %r\n' % (arg,))
                    arg.debug_contents(indent=2, file=sio)

            # trim off the last '\n'
            msg = sio.getvalue()[:-1]

        except Exception as error:
            record_attrs = [
                attr + ': ' + str(getattr(record, attr, 'N/A'))
                for attr in
                ('name', 'levelno', 'pathname', 'lineno', 'msg', 'args', 'exc_info', 'funcName')
            ]
            record_attrs[:0] = ['LoggingFormatter exception: ' + str(error)]
            msg = '\n   '.join(record_attrs)

        # set color if defined
        if self.color is not None:
            msg = '\x1b[%dm' % (30 + self.color,) + msg + '\x1b[0m'

        # return message
        return msg


class LogSink(object):
    """
    This class holds the diagnostic stream and the optional log file all handlers write to.
    """

    def __init__(self):
        """
        This function initializes an empty sink.

        :return: None
        """

        self.stream = None
        self.file_handler = None
        self.lock = threading.Lock()

    def open_file(self, name, mode='a', maxsize=0, backupcount=0):
        """
        This function attaches a rotating log file.

        :param name: file name
        :param mode: file mode
        :param maxsize: maximum size
        :param backupcount: backup count
        :return: None
        """

        self.close()
        self.file_handler = RotatingFileHandler(name, mode, maxsize, backupcount, delay=True)

    def write(self, text):
        """
        This function writes one formatted record.

        :param text: formatted record
        :return: None
        """

        with self.lock:
            if self.file_handler is not None:
                if self.file_handler.stream is None:
                    self.file_handler.stream = self.file_handler._open()
                self.file_handler.stream.write(u'%s\n' % text)
                self.file_handler.flush()

            # write to stream
            if self.stream is not None:
                self.stream.write(u'%s\n' % text)
                self.stream.flush()

    def close(self):
        """
        This function closes the log file.

        :return: None
        """

        if self.file_handler is not None:
            self.file_handler.close()
            self.file_handler = None


class SinkLog(Handler):
    """
    This class sends formatted logs to the shared sink.
    """

    def __init__(self, sink):
        """
        This function initializes the handler object.

        :param sink: LogSink instance
        :return: None
        """

        Handler.__init__(self)

        # check if sink was defined
        if sink is None:
            raise AttributeError('missing sink!')

        self.sink = sink

    def emit(self, record):
        """
        This function sends the message to the sink.

        :param record: message
        :return: None
        """

        try:
            self.sink.write(self.format(record))

        except (KeyboardInterrupt, SystemExit):
            raise

        except:
            traceback.print_exc(file=sys.stderr)
