from . import analysis, heatmap, simulate, vaccinate
from .event import CommandEvent, UsageError
from .handler import command_handlers
