from acyclic_coloring.utils.get_log import GetLog
from acyclic_coloring.utils.log_icon import icon

__all__ = ["GetLog", "icon"]
