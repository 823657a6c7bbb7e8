from django.dispatch.dispatcher import Signal

stage_completed = Signal()   # sender is SimulationRun instance, kwargs: stage
stage_failed = Signal()      # kwargs: stage, exception
run_blew_up = Signal()       # kwargs: closure, time, step
