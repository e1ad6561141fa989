import logging
from contextlib import contextmanager

from fastapi import HTTPException

from errors import BurlingError

logger = logging.getLogger(__name__)

SERVER_SIDE = {"internal-error", "construction-invariant-violated"}


def to_http(e: BurlingError) -> HTTPException:
    """
    Translate a library error into an HTTP error.
    Broken invariants are the server's fault; everything else is a bad request.
    """
    status_code = 500 if e.code in SERVER_SIDE else 400
    if status_code == 500:
        logger.error(f"{e.code}: {e.detail}")
    return HTTPException(status_code=status_code, detail=e.as_dict())


@contextmanager
def http_errors():
    try:
        yield
    except BurlingError as e:
        raise to_http(e)
