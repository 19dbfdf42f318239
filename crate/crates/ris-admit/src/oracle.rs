//! Exhaustive reference solver for small instances.
//!
//! Enumerates every admission subset and picks the best under the same
//! scenario semantics as the admission module, with one deliberate
//! difference: the scoring here is written from scratch (element splits,
//! compute sizing, utilities, the objective) so the two implementations can
//! cross-check each other. Group formation and the panel allocation are the
//! shared deterministic pipeline; per-user element shares and panel markers
//! follow from the subset, they are not free variables.
//!
//! The subset space is 2^N, so instances are capped (12 users by default).

use crate::admission::{
    allocate_ris, build_priority_queue, filter_candidates, form_groups, CandidateSet, Group,
    Thresholds, UtilityWeights,
};
use serde::Serialize;

use crate::channel::{self, ChannelConfig};
use crate::error::{Error, Result};
use crate::geometry::{angular_deviation, AngleDeg};
use crate::workload::Scenario;

/// Default cap on instance size; 2^12 subsets evaluate in well under a second.
pub const DEFAULT_MAX_USERS: usize = 12;

/// Per-user decision of the winning subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleDecision {
    pub admitted: bool,
    /// Served through the panel with at least one element.
    pub ris_assigned: bool,
    /// Panel elements dedicated to this user.
    pub ris_elements: u32,
}

/// Outcome of the exhaustive search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub best_objective: f64,
    pub best_decisions: Vec<OracleDecision>,
    /// Decision vectors actually evaluated. Without pruning this is exactly
    /// 2^N; the pruned variant skips vectors that fail the cheap bandwidth
    /// pre-check.
    pub explored_count: u64,
}

impl OracleResult {
    pub fn admitted(&self) -> Vec<bool> {
        self.best_decisions.iter().map(|d| d.admitted).collect()
    }

    pub fn admitted_count(&self) -> usize {
        self.best_decisions.iter().filter(|d| d.admitted).count()
    }
}

/// Scenario facts the evaluator needs per subset: the shared grouping
/// pipeline output plus raw distances.
struct OracleContext<'a> {
    scenario: &'a Scenario,
    weights: UtilityWeights,
    channel_cfg: ChannelConfig,
    groups: Vec<Group>,
    group_of: Vec<Option<usize>>,
    bs_user_m: Vec<f64>,
    ris_user_m: Vec<f64>,
    bs_ris_m: f64,
    /// Best achievable rate across users, the utility rate normalizer.
    top_rate_bps: f64,
}

impl<'a> OracleContext<'a> {
    fn build(
        scenario: &'a Scenario,
        weights: &UtilityWeights,
        thresholds: &Thresholds,
        channel_cfg: &ChannelConfig,
    ) -> Result<Self> {
        channel_cfg.validate()?;
        let users = &scenario.users;

        let candidates = if scenario.ris_enabled {
            let mut deviations: Vec<AngleDeg> = Vec::with_capacity(users.len());
            for u in users {
                deviations.push(angular_deviation(
                    &scenario.ris_position,
                    &scenario.bs_position,
                    &u.position,
                )?);
            }
            filter_candidates(&deviations, thresholds.theta_range_deg)
        } else {
            CandidateSet::empty(users.len())
        };
        let queue = build_priority_queue(&candidates, users);
        let mut groups = form_groups(
            &queue,
            users,
            thresholds.theta_max_deg,
            thresholds.group_max_size,
            scenario.bandwidth_capacity,
        );
        allocate_ris(&mut groups, scenario.ris_elements)?;

        let mut group_of = vec![None; users.len()];
        for g in &groups {
            for &id in &g.members {
                group_of[id] = Some(g.id);
            }
        }

        let bs_ris_m = scenario.bs_position.distance(&scenario.ris_position);
        let bs_user_m: Vec<f64> = users
            .iter()
            .map(|u| scenario.bs_position.distance(&u.position))
            .collect();
        let ris_user_m: Vec<f64> = users
            .iter()
            .map(|u| scenario.ris_position.distance(&u.position))
            .collect();
        if bs_user_m.contains(&0.0) {
            return Err(Error::DegenerateGeometry("user coincides with base station"));
        }

        let mut top_rate_bps: f64 = 0.0;
        for u in users {
            let best = match group_of[u.id] {
                Some(gid) => channel::ris_rate(
                    channel_cfg,
                    groups[gid].elements,
                    bs_user_m[u.id],
                    bs_ris_m,
                    ris_user_m[u.id],
                    u.bandwidth_hz,
                )
                .bps(),
                None => channel::direct_rate(channel_cfg, bs_user_m[u.id], u.bandwidth_hz).bps(),
            };
            top_rate_bps = top_rate_bps.max(best);
        }

        Ok(OracleContext {
            scenario,
            weights: *weights,
            channel_cfg: *channel_cfg,
            groups,
            group_of,
            bs_user_m,
            ris_user_m,
            bs_ris_m,
            top_rate_bps,
        })
    }

    /// Element share of every user under a subset: each group's budget goes
    /// to its admitted members in proportion to priority, rounded by largest
    /// remainder, remainder ties to the earliest member.
    fn shares_for(&self, admitted: &[bool]) -> Vec<u32> {
        let mut shares = vec![0u32; admitted.len()];
        for g in &self.groups {
            let present: Vec<usize> = g
                .members
                .iter()
                .copied()
                .filter(|&id| admitted[id])
                .collect();
            if present.is_empty() {
                continue;
            }
            let mass: u64 = present
                .iter()
                .map(|&id| self.scenario.users[id].priority as u64)
                .sum();
            let budget = g.elements as u64;
            let mut floors = vec![0u64; present.len()];
            let mut remainders = vec![0u64; present.len()];
            let mut used = 0u64;
            for (slot, &id) in present.iter().enumerate() {
                let exact = self.scenario.users[id].priority as u64 * budget;
                floors[slot] = exact / mass;
                remainders[slot] = exact % mass;
                used += floors[slot];
            }
            let mut spare = budget - used;
            while spare > 0 {
                let mut pick = 0;
                for slot in 1..present.len() {
                    if remainders[slot] > remainders[pick] {
                        pick = slot;
                    }
                }
                floors[pick] += 1;
                remainders[pick] = 0;
                spare -= 1;
            }
            for (slot, &id) in present.iter().enumerate() {
                shares[id] = floors[slot] as u32;
            }
        }
        shares
    }

    fn rate_for(&self, user_id: usize, elements: u32) -> f64 {
        let u = &self.scenario.users[user_id];
        match self.group_of[user_id] {
            Some(_) => channel::ris_rate(
                &self.channel_cfg,
                elements,
                self.bs_user_m[user_id],
                self.bs_ris_m,
                self.ris_user_m[user_id],
                u.bandwidth_hz,
            )
            .bps(),
            None => channel::direct_rate(&self.channel_cfg, self.bs_user_m[user_id], u.bandwidth_hz)
                .bps(),
        }
    }

    /// Scores one subset, written independently of the admission module.
    /// `None` marks an infeasible subset.
    fn evaluate(&self, admitted: &[bool]) -> Option<f64> {
        let users = &self.scenario.users;

        let mut bandwidth = 0.0;
        for u in users {
            if admitted[u.id] {
                bandwidth += u.bandwidth_hz;
            }
        }
        if bandwidth > self.scenario.bandwidth_capacity {
            return None;
        }

        let shares = self.shares_for(admitted);

        let mut needed = 0.0;
        let mut demand = 0.0;
        for u in users {
            if !admitted[u.id] {
                continue;
            }
            let rate = self.rate_for(u.id, shares[u.id]);
            let transmission = u.data_bits / rate;
            let slack = u.deadline_s - transmission;
            if slack <= 0.0 {
                return None;
            }
            needed += u.compute_cycles / slack;
            demand += u.compute_cycles;
        }
        if needed > self.scenario.mec_capacity {
            return None;
        }
        let per_cycle = if demand > 0.0 {
            (self.scenario.mec_capacity - needed) / demand
        } else {
            0.0
        };

        let mut weighted = 0.0;
        for u in users {
            if !admitted[u.id] {
                continue;
            }
            let rate = self.rate_for(u.id, shares[u.id]);
            let transmission = u.data_bits / rate;
            let slack = u.deadline_s - transmission;
            let grant = u.compute_cycles / slack + u.compute_cycles * per_cycle;
            let delay = transmission + u.compute_cycles / grant;
            let rate_part = self.weights.alpha1 * (rate / self.top_rate_bps);
            let delay_part = self.weights.alpha2 * (1.0 - delay / u.deadline_s).max(0.0);
            weighted += u.priority as f64 * (rate_part + delay_part);
        }

        let mass_total: u64 = self.groups.iter().map(|g| g.priority_mass).sum();
        let panel = self.scenario.ris_elements;
        let mut panel_term = 0.0;
        if panel > 0 && mass_total > 0 {
            let mut raw = 0.0;
            for g in &self.groups {
                let served: u64 = g.members.iter().map(|&id| shares[id] as u64).sum();
                raw += g.priority_mass as f64 * served as f64;
            }
            panel_term = raw / (panel as f64 * mass_total as f64);
        }

        let priority_total: f64 = users.iter().map(|u| u.priority as f64).sum();
        let mut penalty = 0.0;
        if priority_total > 0.0 {
            let rejected: f64 = users
                .iter()
                .filter(|u| !admitted[u.id])
                .map(|u| u.priority as f64)
                .sum();
            penalty = rejected / priority_total;
        }

        Some(
            self.weights.gamma1 * weighted + self.weights.gamma2 * panel_term
                - self.weights.gamma3 * penalty,
        )
    }
}

/// Scores one decision vector with the oracle's scorer. `Ok(None)` marks an
/// infeasible vector. Used to cross-check the admission module's scoring.
pub fn evaluate_decision(
    scenario: &Scenario,
    weights: &UtilityWeights,
    thresholds: &Thresholds,
    channel_cfg: &ChannelConfig,
    admitted: &[bool],
) -> Result<Option<f64>> {
    if admitted.len() != scenario.users.len() {
        return Err(Error::MismatchedInputs(format!(
            "{} decisions for {} users",
            admitted.len(),
            scenario.users.len()
        )));
    }
    let ctx = OracleContext::build(scenario, weights, thresholds, channel_cfg)?;
    Ok(ctx.evaluate(admitted))
}

fn lexicographically_below(a: u64, b: u64, n_users: usize) -> bool {
    for i in 0..n_users {
        let (bit_a, bit_b) = ((a >> i) & 1, (b >> i) & 1);
        if bit_a != bit_b {
            return bit_a < bit_b;
        }
    }
    false
}

fn search(
    scenario: &Scenario,
    weights: &UtilityWeights,
    thresholds: &Thresholds,
    channel_cfg: &ChannelConfig,
    max_users: usize,
    prune_bandwidth: bool,
) -> Result<OracleResult> {
    let n = scenario.users.len();
    if n > max_users {
        return Err(Error::InstanceTooLarge { users: n, cap: max_users });
    }
    let ctx = OracleContext::build(scenario, weights, thresholds, channel_cfg)?;

    let total: u64 = 1u64 << n;
    let mut admitted = vec![false; n];
    let mut explored = 0u64;
    // (objective, admitted count, mask); ties fall to more admissions, then
    // the lexicographically smallest decision vector.
    let mut best: Option<(f64, u32, u64)> = None;
    for mask in 0..total {
        if prune_bandwidth {
            let mut b = 0.0;
            for (i, u) in scenario.users.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    b += u.bandwidth_hz;
                }
            }
            if b > scenario.bandwidth_capacity {
                continue;
            }
        }
        explored += 1;
        for (i, slot) in admitted.iter_mut().enumerate() {
            *slot = (mask >> i) & 1 == 1;
        }
        let Some(objective) = ctx.evaluate(&admitted) else { continue };
        let count = mask.count_ones();
        let wins = match &best {
            None => true,
            Some((bo, bc, bm)) => {
                objective > *bo
                    || (objective == *bo
                        && (count > *bc
                            || (count == *bc && lexicographically_below(mask, *bm, n))))
            }
        };
        if wins {
            best = Some((objective, count, mask));
        }
    }

    // The empty subset is always feasible, so a winner always exists.
    let (best_objective, _, best_mask) = best.expect("empty subset is feasible");
    for (i, slot) in admitted.iter_mut().enumerate() {
        *slot = (best_mask >> i) & 1 == 1;
    }
    let shares = ctx.shares_for(&admitted);
    let best_decisions = (0..n)
        .map(|i| OracleDecision {
            admitted: admitted[i],
            ris_assigned: admitted[i] && shares[i] > 0,
            ris_elements: if admitted[i] { shares[i] } else { 0 },
        })
        .collect();
    Ok(OracleResult { best_objective, best_decisions, explored_count: explored })
}

/// Finds the best admission subset by full enumeration. Examines every one
/// of the 2^N decision vectors; fails with `InstanceTooLarge` when the
/// scenario has more than `max_users` users.
pub fn exhaustive_optimal(
    scenario: &Scenario,
    weights: &UtilityWeights,
    thresholds: &Thresholds,
    channel_cfg: &ChannelConfig,
    max_users: usize,
) -> Result<OracleResult> {
    search(scenario, weights, thresholds, channel_cfg, max_users, false)
}

/// Same search with a cheap bandwidth pre-check that skips vectors already
/// over the cap; `explored_count` then reflects only the vectors evaluated.
pub fn exhaustive_optimal_pruned(
    scenario: &Scenario,
    weights: &UtilityWeights,
    thresholds: &Thresholds,
    channel_cfg: &ChannelConfig,
    max_users: usize,
) -> Result<OracleResult> {
    search(scenario, weights, thresholds, channel_cfg, max_users, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admission::AdmissionPipeline;
    use crate::geometry::Point3;
    use crate::workload::{ServiceKind, UserRequest};

    fn base_user(id: usize, x: f64, y: f64) -> UserRequest {
        UserRequest {
            id,
            class: ServiceKind::Fembb,
            priority: 2,
            sector: 0,
            position: Point3::new(x, y, 1.5),
            arrival_s: 0.01 * id as f64,
            deadline_s: 0.2,
            compute_cycles: 1e9,
            data_bits: 2e7,
            bandwidth_hz: 5e7,
        }
    }

    fn scenario_with(users: Vec<UserRequest>) -> Scenario {
        Scenario {
            seed: 7,
            sector_count: 2,
            bs_position: Point3::new(0.0, 0.0, 25.0),
            ris_position: Point3::new(80.0, 0.0, 10.0),
            ris_elements: 256,
            ris_enabled: true,
            mec_capacity: 1e14,
            bandwidth_capacity: 1e10,
            users,
        }
    }

    fn defaults() -> (UtilityWeights, Thresholds, ChannelConfig) {
        (
            UtilityWeights::default(),
            Thresholds::default(),
            ChannelConfig::default(),
        )
    }

    #[test]
    fn test_empty_scenario_scores_zero() {
        let scenario = scenario_with(vec![]);
        let (w, t, c) = defaults();
        let r = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
        assert_eq!(r.best_objective, 0.0);
        assert!(r.best_decisions.is_empty());
        assert_eq!(r.explored_count, 1);
    }

    #[test]
    fn test_single_feasible_user_is_admitted() {
        let scenario = scenario_with(vec![base_user(0, 60.0, 20.0)]);
        let (w, t, c) = defaults();
        let r = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
        assert_eq!(r.explored_count, 2);
        assert!(r.best_decisions[0].admitted);
        assert!(r.best_objective > 0.0);
    }

    #[test]
    fn test_explored_count_is_full_space() {
        let users: Vec<UserRequest> = (0..6)
            .map(|i| base_user(i, 40.0 + 20.0 * i as f64, -30.0 + 12.0 * i as f64))
            .collect();
        let scenario = scenario_with(users);
        let (w, t, c) = defaults();
        let r = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
        assert_eq!(r.explored_count, 64);
        assert_eq!(r.admitted_count(), 6);
    }

    #[test]
    fn test_instance_cap_enforced() {
        let users: Vec<UserRequest> = (0..6).map(|i| base_user(i, 50.0, 10.0 * i as f64)).collect();
        let scenario = scenario_with(users);
        let (w, t, c) = defaults();
        let err = exhaustive_optimal(&scenario, &w, &t, &c, 5).unwrap_err();
        match err {
            Error::InstanceTooLarge { users, cap } => {
                assert_eq!(users, 6);
                assert_eq!(cap, 5);
            }
            other => panic!("wrong error: {other}"),
        }
    }

    // Identical twins with room for exactly one: the subsets {0} and {1}
    // score the same, so the lexicographically smallest decision vector
    // wins, which is the one rejecting the earlier id.
    #[test]
    fn test_tie_breaks_to_lexicographic_vector() {
        let mut scenario = scenario_with(vec![
            base_user(0, 150.0, 60.0),
            base_user(1, 150.0, 60.0),
        ]);
        scenario.bandwidth_capacity = 6e7;
        let (w, t, c) = defaults();
        let r = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
        assert_eq!(r.admitted_count(), 1);
        assert!(!r.best_decisions[0].admitted);
        assert!(r.best_decisions[1].admitted);
    }

    #[test]
    fn test_pruned_variant_matches_and_skips() {
        let mut scenario = scenario_with(
            (0..5)
                .map(|i| base_user(i, 60.0 + 15.0 * i as f64, 25.0))
                .collect(),
        );
        scenario.bandwidth_capacity = 1.6e8;
        let (w, t, c) = defaults();
        let full = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
        let pruned = exhaustive_optimal_pruned(&scenario, &w, &t, &c, 12).unwrap();
        assert_eq!(full.best_objective, pruned.best_objective);
        assert_eq!(full.best_decisions, pruned.best_decisions);
        assert_eq!(full.explored_count, 32);
        assert!(pruned.explored_count < 32);
    }

    // The oracle maximizes over every subset, so scoring the greedy decision
    // vector with the oracle's own scorer can never land above the oracle's
    // best. Even user ids sit near the panel's useful cone, odd ones far off
    // it, so instances mix grouped and direct users.
    #[test]
    fn test_dominates_greedy_on_seeded_instances() {
        let (w, t, c) = defaults();
        for k in 0..10u64 {
            let users: Vec<UserRequest> = (0..8)
                .map(|i| {
                    if i % 2 == 0 {
                        base_user(i, 25.0 + 6.0 * i as f64 + 2.0 * k as f64, -30.0 + 9.0 * i as f64)
                    } else {
                        base_user(i, 125.0 + 6.0 * i as f64, 60.0 + 3.0 * k as f64)
                    }
                })
                .collect();
            let mut scenario = scenario_with(users);
            scenario.mec_capacity = 4e10;
            let oracle = exhaustive_optimal(&scenario, &w, &t, &c, 12).unwrap();
            let pipeline = AdmissionPipeline::new(&scenario, &w, &t, &c).unwrap();
            let greedy = pipeline.greedy();
            let greedy_scored = evaluate_decision(&scenario, &w, &t, &c, &greedy)
                .unwrap()
                .expect("greedy output must be feasible");
            assert!(
                greedy_scored <= oracle.best_objective,
                "greedy {greedy_scored} above oracle {oracle:?}"
            );
        }
    }

    // Both scorers run the same semantics, so they must agree closely on
    // arbitrary feasible vectors and exactly on feasibility verdicts. The
    // population mixes two angular clusters near the panel with far-off
    // direct users, so element splits are exercised.
    #[test]
    fn test_scorers_agree_on_random_vectors() {
        let (w, t, c) = defaults();
        let spots = [
            (30.0, 10.0),
            (10.0, -20.0),
            (-40.0, 30.0),
            (-20.0, 120.0),
            (150.0, 60.0),
            (90.0, -100.0),
            (160.0, -30.0),
        ];
        let users: Vec<UserRequest> = spots
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| base_user(i, x, y))
            .collect();
        let mut scenario = scenario_with(users);
        scenario.mec_capacity = 5e10;
        let pipeline = AdmissionPipeline::new(&scenario, &w, &t, &c).unwrap();
        assert!(pipeline.candidates().len() >= 3, "cone must catch users");
        assert!(!pipeline.groups().is_empty());
        for mask in 0u64..128 {
            let admitted: Vec<bool> = (0..7).map(|i| (mask >> i) & 1 == 1).collect();
            let ours = pipeline.evaluate_subset(&admitted);
            let theirs = evaluate_decision(&scenario, &w, &t, &c, &admitted).unwrap();
            match (ours, theirs) {
                (None, None) => {}
                (Some(a), Some(b)) => {
                    let scale = a.abs().max(b.abs()).max(1e-12);
                    assert!(
                        (a - b).abs() <= 1e-9 * scale,
                        "mask {mask}: {a} vs {b}"
                    );
                }
                (a, b) => panic!("feasibility disagreement on mask {mask}: {a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn test_decision_vector_length_checked() {
        let scenario = scenario_with(vec![base_user(0, 60.0, 20.0)]);
        let (w, t, c) = defaults();
        assert!(evaluate_decision(&scenario, &w, &t, &c, &[true, false]).is_err());
    }
}
