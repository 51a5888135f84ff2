"""The three testing applications: failure clustering, feature navigation,
and exporting a mined base as PICT constraints."""
import os

from fcakit import (
    bind_implications,
    canonical_base,
    export_pict,
    failure_report,
    feature_neighbors,
    holds,
    parse_implications_file,
)
from fcakit.io import load_context

HERE = os.path.dirname(__file__)
fixtures = os.path.join(HERE, "..", "fixtures")

# 1. Which failed tests share attributes? (regression meta-report)
tst = load_context(os.path.join(fixtures, "testrun.cxt"))
report = failure_report(tst, "failed", depth=1)
print(report.render())

# 2. Closest features by tags.
fea = load_context(os.path.join(fixtures, "features.cxt"))
print(feature_neighbors(fea, ["https", "login"]).render())

# 3. Mine a base and hand it to a pairwise generator as constraints.
num = load_context(os.path.join(fixtures, "numbers.cxt"))
model = export_pict(canonical_base(num), num.attributes)
print("PICT constraints:")
print(model.render())

# 4. Negated attributes: check a dependency list over the dichotomized context.
geo = load_context(os.path.join(fixtures, "geo.cxt"))
with open(os.path.join(fixtures, "geo_implications.txt"), encoding="utf-8") as fh:
    parsed = parse_implications_file(fh.read())
dicho = geo.dichotomize()
impls = bind_implications(parsed, dicho.attributes)
ok = sum(holds(dicho, imp) for imp in impls)
print(f"geotargeting dependency list: {ok}/{len(impls)} implications hold")
