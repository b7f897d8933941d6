"""Run every numbered verification suite and print the text reports.

The same runners back the ``etazeros verify`` subcommand; exit-status 1
there corresponds to any gating row failing here.
"""

from etazeros.verify import THEOREM_NUMBERS, run_theorem

for n in THEOREM_NUMBERS:
    rep = run_theorem(n)
    print(rep.to_text())

print("margins are signed slack (positive = strict inequality holds);")
print("rows tagged [info] are observational and never gate the verdict.")
