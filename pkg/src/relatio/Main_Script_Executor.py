""" From this script the whole workbench can be exercised: the worked queries, the table dumps and the law suites.
    The commands below replay the acceptance runs on the bundled sample logics.
"""
import os

Schedule = []
# The restricted-rules companion separates s1 from s2
Schedule.append("python prove.py --logic s2 --companion re --premises \"(p & q)\" --goal \"(p | q)\"")
Schedule.append("python prove.py --logic s1 --companion re --premises \"(p & q)\" --goal \"(p | q)\"")
# Paraconsistency of the left companion of classical logic
Schedule.append("python prove.py --logic cpc --companion rho:L --premises \"p,~p\" --goal q")
Schedule.append("python prove.py --logic cpc --companion rho:L --premises \"p,(p > q)\" --goal q")
# Restricted modus ponens blocks explosion in the Hilbert presentation of classical logic
Schedule.append("python prove.py --logic cpc_hilbert --companion re --depth 1 --premises \"p,~p\" --goal q")
# Tables of the two systems and of their companions
Schedule.append("python dump.py --logic s1 --cap 1 --out tables/s1.table")
Schedule.append("python dump.py --logic s2 --cap 1 --out tables/s2.table")
Schedule.append("python dump.py --logic s1 --companion re --cap 1 --out tables/s1_re.table")
Schedule.append("python dump.py --logic s2 --companion re --cap 1 --out tables/s2_re.table")
Schedule.append("python dump.py --logic cpc --companion rho:L --depth 1 --cap 2 --out tables/cpc_l.table")
Schedule.append("python dump.py --logic pwk --depth 1 --cap 2 --out tables/pwk.table")
# Law suites
Schedule.append("python check.py all --seed 1 --universe 5 --report tables/all.report")
Schedule.append("python check.py l_eq_re_iff --seed 3")
# Dropping the downward-directed hypothesis of dd_commute is expected to fail
Schedule.append("python check.py dd_commute --sigma_generator upward --no_hypothesis_check --instances 50")

for i in range(len(Schedule)):
    os.system(Schedule[i])
