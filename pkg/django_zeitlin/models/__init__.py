from .runs import *
from .logs import *
