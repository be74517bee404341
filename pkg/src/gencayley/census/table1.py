"""The involutory automorphisms of D8 with their omega and Omega sets.

The rendering is compared against a golden file shipped with the
package, so a change in element naming or partition code shows up as a
diff rather than as silently different output.
"""

from __future__ import annotations

import difflib
import logging
from importlib import resources

from gencayley.catalog.families import dihedral
from gencayley.errors import MismatchAgainstGolden
from gencayley.gcs.partition import alpha_partition
from gencayley.groups.automorphisms import GroupMap, involutory_automorphisms

logger = logging.getLogger(__name__)

HEADER = "involution | images | omega | Omega"
GOLDEN_NAME = "table1.txt"


def d8_involutions() -> list[tuple[str, GroupMap]]:
    """The five involutory automorphisms of D8, labelled alpha, beta1..beta4.

    alpha fixes a; the betas invert a and are ordered by the image of b.
    """
    G = dihedral(8)
    a, b = (i for _, i in G.generators)
    maps = sorted(
        involutory_automorphisms(G), key=lambda m: (m.image[a] != a, m.image[b])
    )
    labels = ["alpha"] + [f"beta{i}" for i in range(1, len(maps))]
    return list(zip(labels, maps))


def render_table1() -> str:
    lines = [HEADER]
    for label, alpha in d8_involutions():
        G = alpha.domain
        part = alpha_partition(G, alpha)
        lines.append(
            f"{label} | {alpha.describe()} | {G.format_set(part.omega)} | "
            f"{G.format_set(part.big_omega)}"
        )
    return "\n".join(lines) + "\n"


def golden_table1() -> str:
    return resources.files("gencayley.census").joinpath("golden", GOLDEN_NAME).read_text(
        encoding="utf-8"
    )


def check_table1(rendered: str | None = None) -> str:
    """Render the table and compare it with the golden copy.

    Returns:
        The rendered table

    Raises:
        MismatchAgainstGolden: With the unified diff when they differ
    """
    rendered = render_table1() if rendered is None else rendered
    golden = golden_table1()
    if rendered != golden:
        diff = list(
            difflib.unified_diff(
                golden.splitlines(), rendered.splitlines(), "golden", "rendered", lineterm=""
            )
        )
        logger.warning("Involution table differs from %s", GOLDEN_NAME)
        raise MismatchAgainstGolden("Involution table differs from the golden copy", diff)
    return rendered
