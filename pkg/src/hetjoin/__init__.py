"""Typed n-ary join patterns over heterogeneous sources.

``hetjoin.dsl`` holds the pattern signatures, ``hetjoin.interp_list`` the
sequential cartesian interpreter and ``hetjoin.engine`` the event-correlation
backend with restriction handlers.
"""

from hetjoin.dsl import Bind, Context, CoreSym, ExtSym, PatVar
from hetjoin.engine import Event, EventSym, JoinInstance, Notification, Source
from hetjoin.interp_list import PP, CorePP, ListSym, Num
from hetjoin.time_meta import Interval

__version__ = "0.1.0"

__all__ = [
    "Bind",
    "Context",
    "CoreSym",
    "CorePP",
    "Event",
    "EventSym",
    "ExtSym",
    "Interval",
    "JoinInstance",
    "ListSym",
    "Notification",
    "Num",
    "PP",
    "PatVar",
    "Source",
]
