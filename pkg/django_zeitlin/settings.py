from django.conf import settings


def get_config():
    """
    Returns django_zeitlin's configuration in dictionary format. e.g:
    DJANGO_ZEITLIN = {
        'STEP': 0.25,
        'THREADS': 4,
    }
    """
    return getattr(settings, 'DJANGO_ZEITLIN', {})


def get_default_step():
    return get_config().get('STEP', 0.25)


def get_default_t_end():
    return get_config().get('T_END', 250.0)


def get_reproject_every():
    return get_config().get('REPROJECT_EVERY', 1)


def get_snapshot_every():
    return get_config().get('SNAPSHOT_EVERY', 4)


def get_blowup_factor():
    return get_config().get('BLOWUP_FACTOR', 1e6)


def get_log_level():
    return get_config().get('LOG_LEVEL', 2)


def get_threads():
    return get_config().get('THREADS', 4)


def get_stationarity_window():
    return get_config().get('STATIONARITY_WINDOW', 25.0)


def get_stationarity_tol():
    return get_config().get('STATIONARITY_TOL', 0.05)


def get_fit_fraction():
    return get_config().get('FIT_FRACTION', 0.25)


def get_burn_in_max():
    return get_config().get('BURN_IN_MAX', 1000.0)


def get_casimir_order():
    return get_config().get('CASIMIR_ORDER', 4)


def get_output_dir():
    return get_config().get('OUTPUT_DIR', 'zeitlin_runs')
