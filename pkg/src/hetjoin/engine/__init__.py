"""Event-correlation backend: mailboxes, focused cross-products and restriction handlers."""

from .concurrent import ScriptedScheduler, run_concurrent
from .events import Event, Notification, Source, notify
from .instance import FAIL, Emit, EventSym, JoinInstance, Matcher, Pattern, check_trace_order
from .interceptors import (
    Aligning,
    Chain,
    Interceptor,
    MostRecently,
    Ops,
    aligning,
    as_chain,
    compose_chain,
    most_recently,
)
from .store import EVENT_MAILBOX, MailboxStore, crossproduct, snapshot, snapshot_focused

__all__ = [
    "Aligning",
    "Chain",
    "EVENT_MAILBOX",
    "Emit",
    "Event",
    "EventSym",
    "FAIL",
    "Interceptor",
    "JoinInstance",
    "MailboxStore",
    "Matcher",
    "MostRecently",
    "Notification",
    "Ops",
    "Pattern",
    "ScriptedScheduler",
    "Source",
    "aligning",
    "as_chain",
    "check_trace_order",
    "compose_chain",
    "crossproduct",
    "most_recently",
    "notify",
    "run_concurrent",
    "snapshot",
    "snapshot_focused",
]
