"""Boolean automata networks: definition, simulation and exhaustive analysis.

The heavy lifting lives in the compiled ``banet._core`` extension; this
package re-exports its surface.
"""

from banet._core import *  # noqa: F401,F403
from banet._core import __doc__  # noqa: F401
