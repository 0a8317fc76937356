import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"

SPECTRUM_CSV = """\
# kosc 0.1.0
# subcommand=spectrum approx=nrwa r=1 alpha=10 q_min=1 q_max=3 q_steps=3
q,root_index,re_z,im_z,stability,residual
1,0,-1.1,-0.5,Stable,1e-15
1,1,1.1,0.25,Unstable,1e-15
# ERROR q=2: synthetic marker, must be skipped
2,0,-2.1,-0.5,Stable,1e-15
2,1,2.1,0.05,Unstable,1e-15
3,0,-3.1,-0.5,Stable,1e-15
3,1,3.1,-0.01,Stable,1e-15
"""

DENSITY_CSV = """\
# kosc 0.1.0
q,r,alpha,c0,n_avg,abs_err,diverged
1,0.5,10,1.5,0.25,1e-9,false
2,0.5,10,2.5,0.75,1e-9,false
3,0.5,10,1e12,5e11,inf,true
1,2,10,1.2,0.1,1e-9,false
2,2,10,1.3,0.15,1e-9,false
3,2,10,1.1,0.05,1e-9,false
"""

ZENO_CSV = """\
# kosc 0.1.0
q,r,alpha,xi,regime,convention
1,0.1,10,0.4,NonMarkovian,literal
2,0.1,10,0.2,Crossover,literal
3,0.1,10,0.1,Crossover,literal
1,1,10,0.3,Crossover,literal
2,1,10,0.15,Crossover,literal
3,1,10,0.05,Crossover,literal
1,10,10,0.2,Markovian,literal
2,10,10,0.1,Markovian,literal
3,10,10,0.02,Markovian,literal
"""


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


@pytest.fixture
def spectrum_csv(tmp_path):
    return _write(tmp_path, "spectrum.csv", SPECTRUM_CSV)


@pytest.fixture
def density_csv(tmp_path):
    return _write(tmp_path, "dens.csv", DENSITY_CSV)


@pytest.fixture
def zeno_csv(tmp_path):
    return _write(tmp_path, "zeno.csv", ZENO_CSV)
