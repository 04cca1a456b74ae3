# Equally spaced hues on an L*=60 CIELUV ring, checked for separation.

from setmosaic import PaletteError, generate_palette

for n in (3, 6, 10):
    p = generate_palette(n)
    print(n, " ".join(c.hex for c in p.colors), f"min distance {p.min_distance():.1f}")

try:
    generate_palette(11)
except PaletteError as exc:
    print("11 ->", exc)
