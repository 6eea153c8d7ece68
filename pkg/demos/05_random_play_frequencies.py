"""
What random play prefers
========================

Play at random: pick a ready vertex uniformly, then a uniform random choice
of chips for it. Some stable configurations show up far more often than
others. Note that these frequencies are NOT proportional to the number of
stabilization sequences per configuration (different sequences have
different probabilities), which is why both tables are printed side by
side. Watch for two patterns: the fully sorted configuration tends to be
the mode, and standard-filling outcomes tend to beat the rest.
"""
from starchip import StarParams, emit_table, enumerate_all, run_montecarlo

params = StarParams(2, 3)
report = run_montecarlo(params, trials=20_000, seed=424242)

print(emit_table(report))
print()
print("for contrast, the exhaustive sequence census:")
print(emit_table(enumerate_all(params)))

# Same seed, same report: experiments are exactly reproducible.
again = run_montecarlo(params, trials=20_000, seed=424242)
print(f"rerun with the same seed is identical: {report == again}")
