"""The whole computation as one report; same as `gradedq verify paper`."""

# %%
from gradedq.verify import run_verification

report = run_verification(40)
print(report.text())
print("exit code would be", report.exit_code)

# %% A window that is too small for the spectral sequences gets refused, not guessed.
small = run_verification(4)
print(small.summary(), "-> exit", small.exit_code)
