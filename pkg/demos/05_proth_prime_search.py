"""
Searching for Proth primes and cross-checking
=============================================

The command line drives the same functions.  Here it is called in-process.
"""

# %%
import io

from prothx.cli import main, verify

out = io.StringIO()
main(["search", "300", "2000", "--new-regime-only", "--json"], out=out)
print(out.getvalue())

# %%
# Exhaustive comparison against trial division.
counts, disagreements = verify(200_000)
print(counts, disagreements)

# %%
# A large single candidate: 3*2^41 + 1.
main(["pair", "3", "41"])
