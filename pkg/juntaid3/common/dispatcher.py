# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from __future__ import annotations

from asyncio import iscoroutine
from collections import defaultdict
from logging import getLogger
from typing import TYPE_CHECKING, Generic, Hashable, TypeVar

EventNameT = TypeVar("EventNameT", bound=Hashable)

if TYPE_CHECKING:
    from typing import Any, Callable, Final

    EventCallback = Callable[..., Any]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("Dispatcher",)


class Dispatcher(Generic[EventNameT]):
    """A event dispatcher for progress events.

    Listeners can be sync or async functions. :meth:`dispatch` awaits every listener in registration order.
    A listener that raises is logged and the next one still runs.

    **Example usage:**

    .. code-block:: python

        dispatcher: Dispatcher[str] = Dispatcher()

        @dispatcher.listen("trial_finished")
        def on_trial(result: TrialResult) -> None:
            print(result.index, result.exact_loss)

        await dispatcher.dispatch("trial_finished", result)
    """

    __slots__ = ("_event_handlers",)

    def __init__(self) -> None:
        self._event_handlers: defaultdict[EventNameT, list[EventCallback]] = defaultdict(list)

    def close(self) -> None:
        """Remove every listener."""
        self._event_handlers.clear()

    def listen(self, event_name: EventNameT) -> Callable[[EventCallback], EventCallback]:
        """Decorator to register a event listener.

        Parameters
        ----------
        event_name:
            The event name to register the listener to.
        """

        def decorator(callback: EventCallback) -> EventCallback:
            self.add_listener(callback, event_name)
            return callback

        return decorator

    def add_listener(self, callback: EventCallback, event_name: EventNameT) -> None:
        """Add a event listener.

        Parameters
        ----------
        callback:
            The event callback to register.
        event_name:
            The event name to listen to.
        """
        self._event_handlers[event_name].append(callback)

    def remove_listener(self, callback: EventCallback, event_name: EventNameT) -> None:
        """Removes a event listener.

        Raises
        ------
        :class:`ValueError`
            The callback was not registered to this event.
        """
        try:
            self._event_handlers[event_name].remove(callback)
        except ValueError:
            raise ValueError(f"Listener not registered for event {event_name}")

    async def dispatch(self, event_name: EventNameT, *args: Any) -> None:
        """Dispatch a event to every listener of ``event_name``.

        Parameters
        ----------
        event_name:
            The event name to dispatch to.
        args:
            The event arguments. This will be passed to the listeners.
        """
        logger.debug("Dispatching event %s", event_name)

        for handler in list(self._event_handlers.get(event_name, [])):
            try:
                result = handler(*args)
                if iscoroutine(result):
                    await result
            except Exception:
                logger.exception("Exception occured in event handler for %s", event_name)
