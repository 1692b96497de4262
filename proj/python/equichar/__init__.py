from ._equichar import *  # noqa: F401,F403
