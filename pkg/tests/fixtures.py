"""Worked data for n = 3, m = 2 shared by several test modules."""

# the 12 partitions that are both 3-cores and 7-cores, keyed by the number
# of residues with exactly two removable boxes
NARAYANA_3_2 = {
    0: [(), (1,), (2,), (1, 1), (3, 1, 1)],
    1: [(3, 1), (2, 1, 1), (2, 2, 1, 1), (4, 2), (5, 3, 1, 1), (4, 2, 2, 1, 1)],
    2: [(6, 4, 2, 2, 1, 1)],
}

# w = s1 s2 s0 s1 s2 s1 s0 with w(empty) = (5,3,2,2,1,1)
WORD_3 = [1, 2, 0, 1, 2, 1, 0]
CORE_3 = (5, 3, 2, 2, 1, 1)

# w = s3 s0 s1 s2 s3 s2 s1 s0 with w(empty) = (5,2,2,1,1,1)
WORD_4 = [3, 0, 1, 2, 3, 2, 1, 0]
CORE_4 = (5, 2, 2, 1, 1, 1)
