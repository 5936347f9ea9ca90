"""Write the n = 3 pictures of dominant m-minimal alcoves to a directory.

    python3 scripts/render_figures.py --out figures --m 1 2 3
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from shicores.render import render_svg


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    ms: list[int] = field(default_factory=lambda: [1, 2, 3])


def main(cfg: FigureConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for m in cfg.ms:
        path = cfg.out / f"shi_n3_m{m}.svg"
        svg = render_svg(3, m)
        path.write_text(svg, encoding="utf-8")
        shaded = svg.count('class="minimal"')
        print(f"{path}: {shaded} alcoves")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    a = ap.parse_args()
    main(FigureConfig(a.out, a.m))
