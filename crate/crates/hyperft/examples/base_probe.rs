use hyperft::baselines::*;
use hyperft::functions::{Parity, TestFunctionId};
use hyperft::numerics::make_context;
use hyperft::transform::exact_reference;

fn main() {
    let ctx = make_context(100).unwrap();
    let one = ctx.one();
    println!("== Sugihara (osc divisor /6) ==");
    for (levels, mesh_den, eps_exp) in [(8usize, 10u64, -18i64), (8, 12, -18), (9, 12, -18)] {
        let params = SugiharaParams {
            levels,
            base_mesh: ctx.from_ratio(1, mesh_den),
            trunc_eps: ctx.ten_pow(eps_exp),
            max_nodes_per_side: 400_000,
        };
        let method = BaselineMethod::Sugihara(params);
        for (id, par) in [(TestFunctionId::Runge, Parity::Even), (TestFunctionId::TanhPi, Parity::Odd),
                          (TestFunctionId::LogAbs, Parity::Even), (TestFunctionId::AbsVal, Parity::Even)] {
            let r = full_transform_via_half_integrals(
                |x| id.eval(x, &ctx), par, &one, &method, &ctx).unwrap();
            let exact = exact_reference(id, &one, &ctx).unwrap();
            let err = (&r.value.re - &exact.re).hypot(&(&r.value.im - &exact.im));
            println!("L={levels} h=1/{mesh_den} eps=1e{eps_exp} {:8}: err={:.3e} evals={} warn={}",
                id.name(), err.to_f64(), r.n_evals, r.warning.is_some());
        }
    }
}
