//! Drives the module through an embedded interpreter.

use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

#[test]
fn module_from_python() {
    Python::initialize();
    Python::attach(|py| {
        let m = wrap_pymodule!(asai_periods::asai_periods)(py);
        let env = PyDict::new(py);
        env.set_item("ap", m).unwrap();
        let code = c"
import json
def char(re, im='0', k=1):
    return {'k': k, 'rho': {'unitLabel': 'triv', 'unitConductor': 0, 'atUnif': [re, im]}}
def rep(*segs):
    return json.dumps({'field': {'qF': 2, 'ramified': False}, 'segments': list(segs)})

st = ap.Rep.from_json(rep(char('1', k=2)))
assert st.asai_factored() == '1/[(1 - t)]'
assert st.lstar_at_1() == '2/1'
assert st.period(order=12)['match']
assert st.conductor == 1 and st.q_f == 2 and not st.ramified

u = ap.Rep.from_json(rep(char('3/5', '4/5'), char('3/5', '-4/5')))
assert u.lstar_at_1() == '20/13'
assert len(u.flicker_series(order=5)) == 6

assert ap.Rep.from_json(rep(char('8'), char('1/2'), char('3'))).lstar_at_1() == 'pole'
assert ap.segments(rep(char('1'), char('1/4'))) == {'generic': False}
try:
    ap.Rep.from_json(rep(char('1'), char('1/4')))
    raise AssertionError('linked rep accepted')
except ap.NotGenericError:
    pass
try:
    ap.Rep.from_json('{}')
    raise AssertionError('empty descriptor accepted')
except ValueError:
    pass
";
        py.run(code, Some(&env), None).unwrap();
    });
}
