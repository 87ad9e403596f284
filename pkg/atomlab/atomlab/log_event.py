'''
Debug logging and JSON encoding
===============================

Enumerations over window spaces can take a while, so long-running code
calls `debug_log` with short progress messages. By default these are
suppressed; `--verbose` or the `logging` settings section turns them
on.

Console output goes to stderr. Machine-readable reports go to stdout,
and we don't want the two mixed.

We also keep the JSON encoders here, so every document we emit is
encoded the same way.
'''

import datetime
from enum import Enum
import inspect
import io
import json
import sys

import pmss

import atomlab.settings


class LogLevel(Enum):
    '''
    What level of logging do we want?

    NONE: Don't print anything
    SIMPLE: Print a simple message
    EXTENDED: Print a message with a stack trace and timestamp
    '''
    NONE = 'NONE'
    SIMPLE = 'SIMPLE'
    EXTENDED = 'EXTENDED'


pmss.parser('debug_log_level', parent='string', choices=[level.value for level in LogLevel], transform=None)
pmss.register_field(
    name='debug_log_level',
    type='debug_log_level',
    description='How much information do we want to log.\n'\
                '`NONE`: do not print anything\n'\
                '`SIMPLE`: print simple debug messages\n'\
                '`EXTENDED`: print debug message with stack trace and timestamp',
    default='NONE'
)


class LogDestination(Enum):
    '''
    Where do we log? To the console (stderr), or to a file.
    '''
    CONSOLE = 'CONSOLE'
    FILE = 'FILE'


DEBUG_LOG_LEVEL = LogLevel.NONE
DEBUG_LOG_DESTINATIONS = (LogDestination.CONSOLE,)
LOG_FILE = 'atomlab-debug.log'


def _choice(enum, name, raw):
    try:
        return enum(raw)
    except ValueError:
        raise atomlab.settings.SettingsException(
            f"Unknown {name} {raw!r}. Available: {[item.value for item in enum]}"
        ) from None


def initialize_logging(settings_dict=None):
    '''
    Apply the `logging` section of a settings dictionary. With no
    argument, use the loaded settings, reading the level through pmss
    when a settings file was installed as a ruleset.

    Unknown levels or destinations raise `SettingsException`.
    '''
    global DEBUG_LOG_LEVEL, DEBUG_LOG_DESTINATIONS, LOG_FILE
    from_loaded = settings_dict is None
    if from_loaded:
        settings_dict = atomlab.settings.settings
    logging_settings = (settings_dict or {}).get('logging', {})
    if 'debug_log_level' in logging_settings:
        level = _choice(LogLevel, 'debug_log_level', logging_settings['debug_log_level'])
        if from_loaded and atomlab.settings.pmss_settings is not None:
            level = _choice(
                LogLevel, 'debug_log_level',
                atomlab.settings.pmss_settings.debug_log_level(types=['logging'])
            )
        DEBUG_LOG_LEVEL = level
    if 'debug_log_destinations' in logging_settings:
        DEBUG_LOG_DESTINATIONS = tuple(
            _choice(LogDestination, 'debug_log_destinations', d)
            for d in logging_settings['debug_log_destinations']
        )
    if 'log_file' in logging_settings:
        LOG_FILE = logging_settings['log_file']
    debug_log("DEBUG_LOG_LEVEL:", DEBUG_LOG_LEVEL)
    debug_log("DEBUG_DESTINATIONS:", DEBUG_LOG_DESTINATIONS)


def encode_json_line(line):
    '''
    For encoding short data, such as a single record.

    We use a helper function so we have the same encoding everywhere.
    Encoding the same dictionary twice gives the same string.

    >>> encode_json_line({'b': 1, 'a': [2, 3]})
    '{"a": [2, 3], "b": 1}'
    '''
    return json.dumps(line, sort_keys=True)


def encode_json_block(block):
    '''
    For encoding large data, such as a report.

    We use a helper function so we have the same encoding everywhere.
    Encoding the same dictionary twice gives the same string.
    '''
    return json.dumps(block, sort_keys=True, indent=3)


def print_to_string(*args, **kwargs):
    '''
    This is a wrapper around print, which returns a string instead of
    printing it.

    >>> print_to_string("total", 8)
    'total 8\\n'
    '''
    output = io.StringIO()
    print(*args, file=output, **kwargs)
    contents = output.getvalue()
    output.close()
    return contents


def debug_log(*args):
    '''
    Helper function to help us trace our code.

    This is not intended for programmatic debugging. We change format
    whenever it's convenient.
    '''
    if DEBUG_LOG_LEVEL not in (LogLevel.NONE, LogLevel.SIMPLE, LogLevel.EXTENDED):
        raise ValueError("Invalid debug log type: {}".format(DEBUG_LOG_LEVEL))
    if DEBUG_LOG_LEVEL == LogLevel.NONE:
        return
    text = print_to_string(*args)
    if DEBUG_LOG_LEVEL == LogLevel.SIMPLE:
        message = text
    elif DEBUG_LOG_LEVEL == LogLevel.EXTENDED:
        stack = inspect.stack()
        frames = [frame.function for frame in stack[1:4]]
        stack_trace = "/".join(frames)
        message = "{time}: {st:60}\t{body}".format(
            time=datetime.datetime.utcnow().isoformat(),
            st=stack_trace,
            body=text
        )

    if LogDestination.CONSOLE in DEBUG_LOG_DESTINATIONS:
        print(message.strip(), file=sys.stderr)
    if LogDestination.FILE in DEBUG_LOG_DESTINATIONS:
        with open(LOG_FILE, "a", encoding='utf-8') as fp:
            fp.write(message.strip() + "\n")
