'''
Configuration
=============

A thin layer over `pmss` and a YAML file. The library is usable with no
configuration at all: every cap has a registered default. The command
line loads `CLI_SETTINGS` (or a YAML file given with `--config`), and
tests load small dictionaries.

Settings are organized in two sections:

    limits:
        field_size_cap: 65536
        oracle_cap: 65536
        enumeration_max_pm: 9
        line_search_cap: 4096
    logging:
        debug_log_level: SIMPLE
        debug_log_destinations: [CONSOLE]
'''

import copy
import os.path

import pmss
import yaml

# If we e.g. `import settings` and `import atomlab.settings`, we will
# load startup code twice, and register every pmss field twice.
if not __name__.startswith("atomlab."):
    raise ImportError("Please use fully-qualified imports")

pmss_settings = None
settings = None

LIMIT_DEFAULTS = {
    'field_size_cap': 2 ** 16,
    'oracle_cap': 2 ** 16,
    'enumeration_max_pm': 9,
    'line_search_cap': 4096,
}

pmss.register_field(
    name='field_size_cap',
    type=pmss.pmsstypes.TYPES.integer,
    description='Largest field size |F| we are willing to build tables for.',
    default=LIMIT_DEFAULTS['field_size_cap']
)
pmss.register_field(
    name='oracle_cap',
    type=pmss.pmsstypes.TYPES.integer,
    description='Largest window space |F|^n the brute-force atom oracle '
                'will walk.',
    default=LIMIT_DEFAULTS['oracle_cap']
)
pmss.register_field(
    name='enumeration_max_pm',
    type=pmss.pmsstypes.TYPES.integer,
    description='Largest residue field size p^m for which family sweeps '
                'cross-check closed forms by enumeration.',
    default=LIMIT_DEFAULTS['enumeration_max_pm']
)
pmss.register_field(
    name='line_search_cap',
    type=pmss.pmsstypes.TYPES.integer,
    description='Largest graded quotient |K|^l whose lines the property '
                'suite enumerates.',
    default=LIMIT_DEFAULTS['line_search_cap']
)

KNOWN_SECTIONS = {
    'limits': set(LIMIT_DEFAULTS),
    'logging': {'debug_log_level', 'debug_log_destinations', 'log_file'},
}

# What the command line runs with when no `--config` is given.
CLI_SETTINGS = {
    'limits': dict(LIMIT_DEFAULTS),
    'logging': {
        'debug_log_level': 'NONE',
        'debug_log_destinations': ['CONSOLE'],
    },
}


class SettingsException(Exception):
    pass


NOT_INITIALIZED_ERROR = \
    """Attempted to access atomlab settings before loading them:
    * If you are writing test code or a script, call
      `atomlab.settings.load_settings({})` or pass a dictionary.
    * If you are running the command line, you probably have a bug with
      load order."""


def init_pmss_settings(ruleset_paths=None):
    '''
    Initialize pmss from zero or more YAML rulesets. Safe to call more
    than once; only the first call does anything.
    '''
    global pmss_settings
    if pmss_settings is None:
        rulesets = []
        for path in ruleset_paths or []:
            if not os.path.exists(path):
                raise FileNotFoundError(f"PMSS ruleset path not found: {path}")
            rulesets.append(pmss.YAMLFileRuleset(filename=path, watch=False))
        pmss_settings = pmss.init(
            prog=__name__,
            description="Atoms of finite-field power-series rings",
            epilog="For more information, see PMSS documentation.",
            rulesets=rulesets
        )
    return pmss_settings


def _validate(config):
    if not isinstance(config, dict):
        raise SettingsException("Settings must be a mapping of sections")
    for section, values in config.items():
        if section not in KNOWN_SECTIONS:
            raise SettingsException(
                f"Unknown settings section: {section}. "
                f"Available sections: {sorted(KNOWN_SECTIONS)}"
            )
        if not isinstance(values, dict):
            raise SettingsException(f"settings.{section} should be a mapping")
        for key in values:
            if key not in KNOWN_SECTIONS[section]:
                raise SettingsException(
                    f"Unknown setting {section}.{key}. "
                    f"Available: {sorted(KNOWN_SECTIONS[section])}"
                )


def load_settings(config):
    '''
    Load settings from a dictionary or a YAML file, and return them.

    This is a wrapper around `yaml.safe_load()` so we can do some
    validation. A YAML file is also installed as a pmss ruleset.

    We can work from a dictionary rather than config file because we want
    to be able to use pieces of atomlab in scripts and tests, where we
    don't need a full config.

    >>> load_settings({'limits': {'oracle_cap': 4096}})['limits']
    {'oracle_cap': 4096}
    >>> limit('oracle_cap')
    4096
    >>> load_settings({'limts': {}})
    Traceback (most recent call last):
    ...
    atomlab.settings.SettingsException: Unknown settings section: limts. Available sections: ['limits', 'logging']
    >>> reset()
    '''
    global settings

    if isinstance(config, str):
        with open(config, 'r') as f:
            loaded = yaml.safe_load(f) or {}
        _validate(loaded)
        init_pmss_settings([config])
    elif isinstance(config, dict):
        loaded = copy.deepcopy(config)
        _validate(loaded)
    else:
        raise AttributeError("Invalid settings file")

    settings = loaded
    return settings


def reset():
    '''
    Forget loaded settings. Mostly for tests.
    '''
    global settings
    settings = None


def initialized():
    '''
    Check if we're initialized. If not, raise an exception
    '''
    if settings is None:
        raise SettingsException(NOT_INITIALIZED_ERROR)
    return True


def override_limit(name, value):
    '''
    Set a cap in the loaded settings (e.g. from `--cap`).
    '''
    initialized()
    if name not in LIMIT_DEFAULTS:
        raise SettingsException(f"Unknown limit: {name}")
    settings.setdefault('limits', {})[name] = int(value)


def limit(name):
    '''
    Resolve a cap: loaded settings first, then pmss, then the
    registered default.
    '''
    if name not in LIMIT_DEFAULTS:
        raise SettingsException(f"Unknown limit: {name}")
    if settings is not None and name in settings.get('limits', {}):
        return int(settings['limits'][name])
    if pmss_settings is not None:
        value = getattr(pmss_settings, name)(types=['limits'])
        if value is not None:
            return int(value)
    return LIMIT_DEFAULTS[name]
