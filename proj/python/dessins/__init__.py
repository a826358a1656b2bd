"""Dessins d'enfant: combinatorics, Hopf-algebra invariants, Belyi-extending
maps, partition functions and twisted Drinfeld doubles.

The heavy lifting happens in the `_dessins` extension module; this package
re-exports its functions. Dessins are passed around in their text format
`d=<n>; s0=<cycles>; s1=<cycles>`.
"""

from _dessins import *  # noqa: F401,F403

try:  # installed-package layout (wheel puts _dessins inside the package)
    from ._dessins import *  # noqa: F401,F403
except ImportError:
    pass
