//! Small derivative-free maximizers used by the equilibrium search.

/// One coordinate of the search box.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Axis {
    pub lo: f64,
    pub hi: f64,
    /// Periodic axes wrap around instead of clamping.
    pub periodic: bool,
}

impl Axis {
    pub fn project(&self, x: f64) -> f64 {
        if self.periodic {
            let span = self.hi - self.lo;
            let w = (x - self.lo).rem_euclid(span) + self.lo;
            w.clamp(self.lo, self.hi)
        } else {
            x.clamp(self.lo, self.hi)
        }
    }

    /// `n` evenly spaced points including both ends.
    pub fn grid(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let step = (self.hi - self.lo) / (n - 1) as f64;
        (0..n).map(move |i| {
            if i + 1 == n {
                self.hi
            } else {
                self.lo + step * i as f64
            }
        })
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Maximum {
    pub x: Vec<f64>,
    pub value: f64,
    pub converged: bool,
}

/// Nelder-Mead on `-f`, with every trial point projected into the box.
/// Never returns a point worse than `x0`.
pub(crate) fn nelder_mead_max<F>(
    f: F,
    x0: &[f64],
    step: &[f64],
    axes: &[Axis],
    max_iter: usize,
    tol: f64,
) -> Maximum
where
    F: Fn(&[f64]) -> f64,
{
    let n = x0.len();
    let project = |x: &mut [f64]| {
        for (xi, a) in x.iter_mut().zip(axes) {
            *xi = a.project(*xi);
        }
    };
    let cost = |x: &[f64]| -f(x);

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += step[i];
        project(&mut v);
        if (v[i] - x0[i]).abs() < step[i] * 0.5 {
            // pinned against a bound: step the other way
            v[i] = x0[i] - step[i];
            project(&mut v);
        }
        simplex.push(v);
    }
    let mut costs: Vec<f64> = simplex.iter().map(|v| cost(v)).collect();
    let mut converged = false;

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| costs[a].total_cmp(&costs[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        costs = order.iter().map(|&i| costs[i]).collect();

        let size = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if size < tol {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|v| v[j]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64| {
            let mut p: Vec<f64> = centroid
                .iter()
                .zip(&simplex[n])
                .map(|(c, w)| c + t * (c - w))
                .collect();
            project(&mut p);
            p
        };

        let reflected = along(1.0);
        let fr = cost(&reflected);
        if fr < costs[0] {
            let expanded = along(2.0);
            let fe = cost(&expanded);
            if fe < fr {
                simplex[n] = expanded;
                costs[n] = fe;
            } else {
                simplex[n] = reflected;
                costs[n] = fr;
            }
            continue;
        }
        if fr < costs[n - 1] {
            simplex[n] = reflected;
            costs[n] = fr;
            continue;
        }
        let (contracted, fc) = if fr < costs[n] {
            let c = along(0.5);
            let fc = cost(&c);
            (c, fc)
        } else {
            let c = along(-0.5);
            let fc = cost(&c);
            (c, fc)
        };
        if fc < costs[n].min(fr) {
            simplex[n] = contracted;
            costs[n] = fc;
            continue;
        }
        // shrink toward the best vertex
        for i in 1..=n {
            let mut v: Vec<f64> = simplex[i]
                .iter()
                .zip(&simplex[0])
                .map(|(x, b)| b + 0.5 * (x - b))
                .collect();
            project(&mut v);
            costs[i] = cost(&v);
            simplex[i] = v;
        }
    }

    let best = (0..=n)
        .min_by(|&a, &b| costs[a].total_cmp(&costs[b]))
        .expect("non-empty simplex");
    Maximum {
        x: simplex[best].clone(),
        value: -costs[best],
        converged,
    }
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
pub(crate) fn golden_max<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - r * (hi - lo);
    let mut b = lo + r * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa >= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - r * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + r * (hi - lo);
            fb = f(b);
        }
    }
    if fa >= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}
