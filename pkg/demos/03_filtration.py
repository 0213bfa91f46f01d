# %% [markdown]
# # The image over a direct sum
# Over M + N (letters of M first), tableaux are filtered by the partition
# their M-entries occupy.  Each step of the filtration has the dimension of
# a product of two smaller Schur modules.

# %%
from superschur.schurfun import filtration_report
from superschur.shapes import parse_shape
from superschur.supercore import SuperBasis

M, N = SuperBasis.standard(1, 1), SuperBasis.standard(1, 0)
shape = parse_shape("3,1")
print(f"{'xi':>10} {'dim L':>6} {'step':>5} {'product':>8}")
for xi, dim, step, product in filtration_report(shape, M, N):
    print(f"{str(xi):>10} {dim:>6} {step:>5} {product:>8}")
