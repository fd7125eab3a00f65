from __future__ import annotations

from typing import TYPE_CHECKING

from pytest import mark, raises

from juntaid3.common.dispatcher import Dispatcher

if TYPE_CHECKING:
    from typing import Any


@mark.asyncio
@mark.parametrize("func_sync", [True, False])
async def test_listeners(func_sync: bool) -> None:
    dispatcher: Dispatcher[str] = Dispatcher()
    received: list[Any] = []

    def sync_callback(value: int) -> None:
        received.append(value)

    async def async_callback(value: int) -> None:
        received.append(value)

    callback = sync_callback if func_sync else async_callback

    dispatcher.add_listener(callback, "trial_finished")
    await dispatcher.dispatch("trial_finished", 1)
    assert received == [1], "Listener was not called"

    dispatcher.remove_listener(callback, "trial_finished")
    await dispatcher.dispatch("trial_finished", 2)
    assert received == [1], "Removed listener was called"


@mark.asyncio
async def test_listen() -> None:
    dispatcher: Dispatcher[str] = Dispatcher()
    received: list[int] = []

    @dispatcher.listen("batch_finished")
    def on_batch(value: int) -> None:
        received.append(value)

    await dispatcher.dispatch("trial_finished", 1)
    await dispatcher.dispatch("batch_finished", 2)

    assert received == [2], "Listener received a event it did not listen to"


@mark.asyncio
async def test_listeners_run_in_order() -> None:
    dispatcher: Dispatcher[str] = Dispatcher()
    order: list[str] = []

    async def first() -> None:
        order.append("first")

    def second() -> None:
        order.append("second")

    dispatcher.add_listener(first, "test")
    dispatcher.add_listener(second, "test")
    await dispatcher.dispatch("test")

    assert order == ["first", "second"]


@mark.asyncio
async def test_failing_listener_is_logged(caplog) -> None:
    dispatcher: Dispatcher[str] = Dispatcher()
    received: list[int] = []

    def error_causer(value: int) -> None:
        raise RuntimeError("Dummy error")

    def after(value: int) -> None:
        received.append(value)

    dispatcher.add_listener(error_causer, "test")
    dispatcher.add_listener(after, "test")
    await dispatcher.dispatch("test", 3)

    error_count = len([record for record in caplog.records if record.levelname == "ERROR"])
    assert error_count == 1
    assert received == [3], "A failing listener stopped the next one"


def test_remove_nonexistant_listener() -> None:
    dispatcher: Dispatcher[str] = Dispatcher()

    def sync_callback() -> None:
        pass

    with raises(ValueError):
        dispatcher.remove_listener(sync_callback, "test")


@mark.asyncio
async def test_close() -> None:
    dispatcher: Dispatcher[str] = Dispatcher()
    received: list[int] = []

    dispatcher.add_listener(received.append, "test")
    dispatcher.close()
    await dispatcher.dispatch("test", 1)

    assert received == []
