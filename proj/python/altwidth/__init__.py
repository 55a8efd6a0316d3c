try:
    from ._altwidth import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    # in-tree builds leave the extension at the build root
    from _altwidth import *  # noqa: F401,F403
