//! The admission pipeline: angular filtering, priority grouping, element
//! allocation, utilities, and the greedy admission loop.
//!
//! Stages, in order:
//!
//! 1. Users within the panel's angular range become candidates; everyone
//!    else is direct-only.
//! 2. Candidates are queued by priority (descending), arrival time, then id.
//! 3. A sweep over the queue forms groups: the queue head leads a group and
//!    collects, in queue order, every remaining candidate within the angular
//!    spread that fits the size and bandwidth caps.
//! 4. Panel elements are divided across groups in proportion to summed group
//!    priority, exactly exhausting the panel.
//! 5. A greedy loop admits, one at a time, the feasible user whose admission
//!    most improves the objective, until no admission helps.
//!
//! Admission of a set is evaluated as a whole: group elements are re-split
//! among admitted members, compute is sized so every deadline is met and the
//! pool's leftover is then spread work-conservingly, and the objective mixes
//! priority-weighted utilities, reflected-resource usage, and a penalty for
//! each rejected user.

use serde::{Deserialize, Serialize};

use crate::channel::{self, ChannelConfig, LinkRate};
use crate::error::{Error, Result};
use crate::geometry::{angular_deviation, AngleDeg};
use crate::workload::{Scenario, UserRequest};

pub use crate::workload::{Thresholds, UtilityWeights};

/// Panel reachability per user: the angular deviation for users inside the
/// filter range, `None` for direct-only users.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    deviation_deg: Vec<Option<f64>>,
}

impl CandidateSet {
    pub fn empty(n_users: usize) -> Self {
        CandidateSet { deviation_deg: vec![None; n_users] }
    }

    pub fn is_candidate(&self, user_id: usize) -> bool {
        self.deviation_deg[user_id].is_some()
    }

    pub fn deviation(&self, user_id: usize) -> Option<f64> {
        self.deviation_deg[user_id]
    }

    /// Number of candidates.
    pub fn len(&self) -> usize {
        self.deviation_deg.iter().filter(|d| d.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.deviation_deg
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|_| i))
    }
}

/// Marks every user within `theta_range_deg` of the panel axis as a
/// candidate. The bound is inclusive.
pub fn filter_candidates(deviations: &[AngleDeg], theta_range_deg: f64) -> CandidateSet {
    CandidateSet {
        deviation_deg: deviations
            .iter()
            .map(|d| {
                let v = d.value();
                (v <= theta_range_deg).then_some(v)
            })
            .collect(),
    }
}

/// One queued candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueueEntry {
    pub user_id: usize,
    pub priority: u32,
    pub arrival_s: f64,
    pub deviation_deg: f64,
}

/// Queues candidates by priority descending, then arrival ascending, then id
/// ascending. The key is total, so the order is unique regardless of input
/// permutation.
pub fn build_priority_queue(candidates: &CandidateSet, users: &[UserRequest]) -> Vec<QueueEntry> {
    let mut queue: Vec<QueueEntry> = users
        .iter()
        .filter_map(|u| {
            candidates.deviation(u.id).map(|dev| QueueEntry {
                user_id: u.id,
                priority: u.priority,
                arrival_s: u.arrival_s,
                deviation_deg: dev,
            })
        })
        .collect();
    queue.sort_by(|a, b| {
        b.priority
            .cmp(&a.priority)
            .then(a.arrival_s.total_cmp(&b.arrival_s))
            .then(a.user_id.cmp(&b.user_id))
    });
    queue
}

/// A set of candidates served by one partition of the panel.
#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    /// Formation order, dense from zero.
    pub id: usize,
    /// User id of the queue head that opened the group.
    pub leader: usize,
    /// Member user ids in queue order; the leader is first.
    pub members: Vec<usize>,
    /// Sum of member priorities.
    pub priority_mass: u64,
    /// Leader deviation; members lie within the spread of this base angle.
    pub base_deviation_deg: f64,
    /// Elements assigned to the group; zero until allocation runs.
    pub elements: u32,
}

/// Greedy sweep over the queue. The head opens a group and sets its base
/// angle; remaining entries join in queue order while the angular spread,
/// the size cap, and the summed-bandwidth cap all hold.
pub fn form_groups(
    queue: &[QueueEntry],
    users: &[UserRequest],
    theta_max_deg: f64,
    group_max_size: usize,
    bandwidth_cap_hz: f64,
) -> Vec<Group> {
    let mut remaining: Vec<QueueEntry> = queue.to_vec();
    let mut groups = Vec::new();
    while !remaining.is_empty() {
        let leader = remaining.remove(0);
        let mut members = vec![leader.user_id];
        let mut mass = leader.priority as u64;
        let mut bandwidth = users[leader.user_id].bandwidth_hz;
        remaining.retain(|entry| {
            if members.len() >= group_max_size {
                return true;
            }
            let spread = (entry.deviation_deg - leader.deviation_deg).abs();
            let b = users[entry.user_id].bandwidth_hz;
            if spread <= theta_max_deg && bandwidth + b <= bandwidth_cap_hz {
                members.push(entry.user_id);
                mass += entry.priority as u64;
                bandwidth += b;
                false
            } else {
                true
            }
        });
        groups.push(Group {
            id: groups.len(),
            leader: leader.user_id,
            members,
            priority_mass: mass,
            base_deviation_deg: leader.deviation_deg,
            elements: 0,
        });
    }
    groups
}

/// Divides the panel across groups proportionally to group priority mass:
/// floor shares first, then the leftover one element at a time to groups by
/// descending mass, ties in formation order. Exhausts the panel exactly.
pub fn allocate_ris(groups: &mut [Group], panel_elements: u32) -> Result<()> {
    if groups.is_empty() {
        return Ok(());
    }
    let total_mass: u64 = groups.iter().map(|g| g.priority_mass).sum();
    let panel = panel_elements as u64;
    let mut assigned = 0u64;
    for g in groups.iter_mut() {
        g.elements = ((g.priority_mass * panel) / total_mass) as u32;
        assigned += g.elements as u64;
    }
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by(|&a, &b| {
        groups[b]
            .priority_mass
            .cmp(&groups[a].priority_mass)
            .then(a.cmp(&b))
    });
    // The floor shares undershoot by less than one element per group, so a
    // single pass over the sorted order always clears the leftover.
    let leftover = panel - assigned;
    for k in 0..leftover {
        groups[order[(k % groups.len() as u64) as usize]].elements += 1;
    }
    let total: u64 = groups.iter().map(|g| g.elements as u64).sum();
    if total != panel {
        return Err(Error::AllocationExceedsPanel { allocated: total, panel });
    }
    Ok(())
}

/// Splits a group's elements among its admitted members in proportion to
/// priority, largest-remainder rounding, remainder ties in member order.
/// Returns `(user_id, elements)` pairs in member order; the shares sum to the
/// group's elements exactly.
fn split_group_elements(group: &Group, priorities: &[u32], admitted: &[bool]) -> Vec<(usize, u32)> {
    let present: Vec<usize> = group
        .members
        .iter()
        .copied()
        .filter(|&id| admitted[id])
        .collect();
    if present.is_empty() {
        return Vec::new();
    }
    let mass: u64 = present.iter().map(|&id| priorities[id] as u64).sum();
    let r = group.elements as u64;
    let mut shares: Vec<(usize, u32)> = Vec::with_capacity(present.len());
    let mut rems: Vec<(u64, usize)> = Vec::with_capacity(present.len());
    let mut assigned = 0u64;
    for (slot, &id) in present.iter().enumerate() {
        let num = priorities[id] as u64 * r;
        let floor = num / mass;
        shares.push((id, floor as u32));
        rems.push((num % mass, slot));
        assigned += floor;
    }
    rems.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut leftover = r - assigned;
    let mut cursor = 0;
    while leftover > 0 {
        shares[rems[cursor % rems.len()].1].1 += 1;
        cursor += 1;
        leftover -= 1;
    }
    shares
}

/// Utility of one served user: `alpha1` times the rate ratio plus `alpha2`
/// times the remaining-deadline ratio, the latter clamped at zero.
pub fn user_utility(
    weights: &UtilityWeights,
    rate: LinkRate,
    rate_normalizer_bps: f64,
    delay_s: f64,
    deadline_s: f64,
) -> Result<f64> {
    if !rate_normalizer_bps.is_finite() || rate_normalizer_bps <= 0.0 {
        return Err(Error::InvalidNormalizer(rate_normalizer_bps));
    }
    let rate_term = rate.bps() / rate_normalizer_bps;
    let delay_term = (1.0 - delay_s / deadline_s).max(0.0);
    Ok(weights.alpha1 * rate_term + weights.alpha2 * delay_term)
}

/// Priority-weighted share of the panel that reaches served users, normalized
/// to `[0, 1]`: sum over groups of mass times served elements, over the panel
/// size times the total group mass. Zero when the panel is absent or no
/// groups exist.
pub fn ris_resource_utility(groups: &[Group], served_elements: &[u32], panel_elements: u32) -> f64 {
    if panel_elements == 0 || groups.is_empty() {
        return 0.0;
    }
    let total_mass: u64 = groups.iter().map(|g| g.priority_mass).sum();
    if total_mass == 0 {
        return 0.0;
    }
    let mut raw = 0.0;
    for g in groups {
        let served: u64 = g.members.iter().map(|&id| served_elements[id] as u64).sum();
        raw += g.priority_mass as f64 * served as f64;
    }
    raw / (panel_elements as f64 * total_mass as f64)
}

/// Priority-weighted rejection mass over all users, in `[0, 1]`. Zero when
/// every user is admitted or when there are no users.
pub fn rejection_penalty(users: &[UserRequest], admitted: &[bool]) -> f64 {
    let total: f64 = users.iter().map(|u| u.priority as f64).sum();
    if total == 0.0 {
        return 0.0;
    }
    let rejected: f64 = users
        .iter()
        .filter(|u| !admitted[u.id])
        .map(|u| u.priority as f64)
        .sum();
    rejected / total
}

/// The scalar objective: served priority-weighted utility, plus weighted
/// panel usage, minus the weighted rejection penalty. The last two terms
/// enter once for the whole cell.
pub fn objective(
    weights: &UtilityWeights,
    served_weighted_utility: f64,
    ris_utility: f64,
    penalty: f64,
) -> f64 {
    weights.gamma1 * served_weighted_utility + weights.gamma2 * ris_utility
        - weights.gamma3 * penalty
}

/// Per-user admission outcome. Rejected users carry zeros.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UserOutcome {
    pub user_id: usize,
    /// Admission decision.
    pub admitted: bool,
    /// True when the user is served through the panel with at least one
    /// element.
    pub ris_assigned: bool,
    /// Panel elements dedicated to this user.
    pub ris_elements: u32,
    /// Compute allocation in cycles per second.
    pub compute_share: f64,
    /// Achieved link rate in bits per second.
    pub rate_bps: f64,
    /// Achieved end-to-end delay in seconds.
    pub delay_s: f64,
    /// Achieved utility.
    pub utility: f64,
}

/// Outcome of one admission run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdmissionResult {
    pub outcomes: Vec<UserOutcome>,
    pub objective_value: f64,
    /// Normalized reflected-resource usage term.
    pub ris_utility: f64,
    /// Normalized rejection penalty.
    pub rejection_penalty: f64,
    /// Compute pool left unallocated, cycles per second.
    pub residual_compute: f64,
    /// Bandwidth left unclaimed by admitted users, Hz.
    pub residual_bandwidth: f64,
    /// Panel elements not serving any admitted user.
    pub residual_elements: u32,
}

impl AdmissionResult {
    pub fn admitted_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.admitted).count()
    }
}

/// Static per-user link data computed once per scenario.
struct UserLink {
    priority: f64,
    bandwidth_hz: f64,
    data_bits: f64,
    compute_cycles: f64,
    deadline_s: f64,
    /// Direct-path SNR, dimensionless.
    direct_snr: f64,
    /// Reflected SNR of a single element; scales with the element count
    /// squared. Zero for direct-only users.
    reflected_unit_snr: f64,
    /// Rate over the direct path, bits per second.
    direct_rate_bps: f64,
    /// Transmission delay over the direct path, seconds.
    direct_transmission_s: f64,
    group: Option<usize>,
}

/// Everything fixed before the admission loop runs: candidate set, groups,
/// element budget, link constants, and the rate normalizer.
pub struct AdmissionPipeline<'a> {
    scenario: &'a Scenario,
    weights: UtilityWeights,
    candidates: CandidateSet,
    groups: Vec<Group>,
    links: Vec<UserLink>,
    priorities: Vec<u32>,
    /// Best achievable rate over the scenario's users: each candidate rated
    /// with its whole group budget, direct-only users with the direct path.
    rate_normalizer_bps: f64,
    priority_sum: f64,
}

/// Reusable buffer for subset evaluation.
struct EvalScratch {
    /// Elements per user under the current hypothesis.
    elements: Vec<u32>,
}

struct SubsetEval {
    objective: f64,
    ris_utility: f64,
    penalty: f64,
    /// Compute headroom spread per demanded cycle, 1/s.
    leftover_rate: f64,
}

impl<'a> AdmissionPipeline<'a> {
    /// Builds the pipeline: deviations, filter, queue, groups, allocation,
    /// link constants. Fails on degenerate geometry or invalid channel
    /// constants.
    pub fn new(
        scenario: &'a Scenario,
        weights: &UtilityWeights,
        thresholds: &Thresholds,
        channel_cfg: &ChannelConfig,
    ) -> Result<Self> {
        channel_cfg.validate()?;
        let users = &scenario.users;

        let candidates = if scenario.ris_enabled {
            let mut deviations = Vec::with_capacity(users.len());
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

        let bs_ris_distance = scenario.bs_position.distance(&scenario.ris_position);
        if scenario.ris_enabled && !candidates.is_empty() && bs_ris_distance == 0.0 {
            return Err(Error::DegenerateGeometry("panel and base station coincide"));
        }

        let mut group_of = vec![None; users.len()];
        for g in &groups {
            for &id in &g.members {
                group_of[id] = Some(g.id);
            }
        }

        let mut links = Vec::with_capacity(users.len());
        let mut rate_normalizer: f64 = 0.0;
        for u in users {
            let d_bu = scenario.bs_position.distance(&u.position);
            if d_bu == 0.0 {
                return Err(Error::DegenerateGeometry("user coincides with base station"));
            }
            let direct_snr = channel::direct_snr(channel_cfg, d_bu, u.bandwidth_hz);
            let reflected_unit_snr = match group_of[u.id] {
                Some(_) => channel::reflected_unit_snr(
                    channel_cfg,
                    bs_ris_distance,
                    scenario.ris_position.distance(&u.position),
                    u.bandwidth_hz,
                ),
                None => 0.0,
            };
            let direct_rate_bps = channel::shannon_bps(u.bandwidth_hz, direct_snr);
            let best_case = match group_of[u.id] {
                Some(gid) => {
                    let r = groups[gid].elements as f64;
                    channel::shannon_bps(u.bandwidth_hz, direct_snr + reflected_unit_snr * r * r)
                }
                None => direct_rate_bps,
            };
            rate_normalizer = rate_normalizer.max(best_case);
            links.push(UserLink {
                priority: u.priority as f64,
                bandwidth_hz: u.bandwidth_hz,
                data_bits: u.data_bits,
                compute_cycles: u.compute_cycles,
                deadline_s: u.deadline_s,
                direct_snr,
                reflected_unit_snr,
                direct_rate_bps,
                direct_transmission_s: u.data_bits / direct_rate_bps,
                group: group_of[u.id],
            });
        }

        Ok(AdmissionPipeline {
            scenario,
            weights: *weights,
            candidates,
            groups,
            links,
            priorities: users.iter().map(|u| u.priority).collect(),
            rate_normalizer_bps: rate_normalizer,
            priority_sum: scenario.priority_mass(),
        })
    }

    pub fn candidates(&self) -> &CandidateSet {
        &self.candidates
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn rate_normalizer_bps(&self) -> f64 {
        self.rate_normalizer_bps
    }

    /// Rate for a user when served with `elements` panel elements.
    fn rate_with_elements(&self, user_id: usize, elements: u32) -> f64 {
        let link = &self.links[user_id];
        let r = elements as f64;
        let snr = link.direct_snr + link.reflected_unit_snr * r * r;
        channel::shannon_bps(link.bandwidth_hz, snr)
    }

    /// Evaluates an admission hypothesis. `None` means the set is infeasible:
    /// bandwidth over cap, a deadline unreachable at the achieved rate, or
    /// compute demand over the pool.
    fn evaluate(&self, admitted: &[bool], scratch: &mut EvalScratch) -> Option<SubsetEval> {
        debug_assert_eq!(admitted.len(), self.links.len());

        let mut bandwidth = 0.0;
        let mut admitted_priority = 0.0;
        for (i, link) in self.links.iter().enumerate() {
            if admitted[i] {
                bandwidth += link.bandwidth_hz;
                admitted_priority += link.priority;
            }
        }
        if bandwidth > self.scenario.bandwidth_capacity {
            return None;
        }

        // Re-split each group's elements among its admitted members and
        // accumulate the served panel mass.
        let mut ris_raw = 0.0;
        for g in &self.groups {
            let shares = split_group_elements(g, &self.priorities, admitted);
            if !shares.is_empty() {
                ris_raw += g.priority_mass as f64 * g.elements as f64;
            }
            for (id, r) in shares {
                scratch.elements[id] = r;
            }
        }

        // Feasibility pass: deadline slack at the achieved rate, and the
        // minimal compute that meets every deadline.
        let mut needed_total = 0.0;
        let mut demand_cycles = 0.0;
        for (i, link) in self.links.iter().enumerate() {
            if !admitted[i] {
                continue;
            }
            let transmission = match link.group {
                Some(_) => link.data_bits / self.rate_with_elements(i, scratch.elements[i]),
                None => link.direct_transmission_s,
            };
            let slack = link.deadline_s - transmission;
            if slack <= 0.0 {
                return None;
            }
            needed_total += link.compute_cycles / slack;
            demand_cycles += link.compute_cycles;
        }
        if needed_total > self.scenario.mec_capacity {
            return None;
        }

        // Work-conserving spread of the leftover pool, proportional to each
        // admitted user's cycle demand.
        let leftover_rate = if demand_cycles > 0.0 {
            (self.scenario.mec_capacity - needed_total) / demand_cycles
        } else {
            0.0
        };

        let mut served_weighted_utility = 0.0;
        for (i, link) in self.links.iter().enumerate() {
            if !admitted[i] {
                continue;
            }
            let (rate, transmission) = match link.group {
                Some(_) => {
                    let rate = self.rate_with_elements(i, scratch.elements[i]);
                    (rate, link.data_bits / rate)
                }
                None => (link.direct_rate_bps, link.direct_transmission_s),
            };
            let slack = link.deadline_s - transmission;
            let processing = 1.0 / (1.0 / slack + leftover_rate);
            let delay = transmission + processing;
            let rate_term = rate / self.rate_normalizer_bps;
            let delay_term = (1.0 - delay / link.deadline_s).max(0.0);
            served_weighted_utility +=
                link.priority * (self.weights.alpha1 * rate_term + self.weights.alpha2 * delay_term);
        }

        let panel = self.scenario.ris_elements;
        let total_mass: u64 = self.groups.iter().map(|g| g.priority_mass).sum();
        let ris_utility = if panel > 0 && total_mass > 0 {
            ris_raw / (panel as f64 * total_mass as f64)
        } else {
            0.0
        };
        let penalty = if self.priority_sum > 0.0 {
            (self.priority_sum - admitted_priority) / self.priority_sum
        } else {
            0.0
        };
        Some(SubsetEval {
            objective: objective(&self.weights, served_weighted_utility, ris_utility, penalty),
            ris_utility,
            penalty,
            leftover_rate,
        })
    }

    /// Objective of an admission hypothesis, or `None` when infeasible.
    /// Panics if `admitted` is not one flag per user.
    pub fn evaluate_subset(&self, admitted: &[bool]) -> Option<f64> {
        assert_eq!(admitted.len(), self.links.len(), "one flag per user");
        let mut scratch = EvalScratch { elements: vec![0; self.links.len()] };
        self.evaluate(admitted, &mut scratch).map(|e| e.objective)
    }

    /// Runs the greedy admission loop and returns the decision vector.
    pub fn greedy(&self) -> Vec<bool> {
        let n = self.links.len();
        let mut admitted = vec![false; n];
        let mut scratch = EvalScratch { elements: vec![0; n] };
        let mut current = match self.evaluate(&admitted, &mut scratch) {
            Some(e) => e.objective,
            None => return admitted,
        };

        loop {
            // Best candidate this round: highest gain, ties broken by higher
            // priority, earlier arrival, lower id.
            let mut best: Option<(f64, f64, u32, f64, usize)> = None;
            for (i, user) in self.scenario.users.iter().enumerate() {
                if admitted[i] {
                    continue;
                }
                admitted[i] = true;
                let eval = self.evaluate(&admitted, &mut scratch);
                admitted[i] = false;
                let Some(eval) = eval else { continue };
                let gain = eval.objective - current;
                if gain <= 0.0 {
                    continue;
                }
                let wins = match &best {
                    None => true,
                    Some((bg, _, bp, bt, bi)) => {
                        gain > *bg
                            || (gain == *bg
                                && (user.priority > *bp
                                    || (user.priority == *bp
                                        && (user.arrival_s < *bt
                                            || (user.arrival_s == *bt && i < *bi)))))
                    }
                };
                if wins {
                    best = Some((gain, eval.objective, user.priority, user.arrival_s, i));
                }
            }
            match best {
                Some((_, objective, _, _, id)) => {
                    admitted[id] = true;
                    current = objective;
                }
                None => break,
            }
        }
        admitted
    }

    /// Expands a decision vector into the full per-user result. The vector
    /// must be feasible; greedy output always is.
    pub fn materialize(&self, admitted: &[bool]) -> Result<AdmissionResult> {
        if admitted.len() != self.links.len() {
            return Err(Error::MismatchedInputs(format!(
                "{} decisions for {} users",
                admitted.len(),
                self.links.len()
            )));
        }
        let mut scratch = EvalScratch { elements: vec![0; self.links.len()] };
        let eval = self
            .evaluate(admitted, &mut scratch)
            .ok_or_else(|| Error::MismatchedInputs("decision vector is infeasible".into()))?;

        let mut outcomes = Vec::with_capacity(self.links.len());
        let mut compute_used = 0.0;
        let mut bandwidth_used = 0.0;
        let mut elements_used = 0u64;
        for (i, link) in self.links.iter().enumerate() {
            if !admitted[i] {
                outcomes.push(UserOutcome {
                    user_id: i,
                    admitted: false,
                    ris_assigned: false,
                    ris_elements: 0,
                    compute_share: 0.0,
                    rate_bps: 0.0,
                    delay_s: 0.0,
                    utility: 0.0,
                });
                continue;
            }
            let elements = if link.group.is_some() { scratch.elements[i] } else { 0 };
            let rate = match link.group {
                Some(_) => self.rate_with_elements(i, elements),
                None => link.direct_rate_bps,
            };
            let transmission = link.data_bits / rate;
            let slack = link.deadline_s - transmission;
            let needed = link.compute_cycles / slack;
            let compute_share = needed + link.compute_cycles * eval.leftover_rate;
            let processing = 1.0 / (1.0 / slack + eval.leftover_rate);
            let delay = transmission + processing;
            let utility = self.weights.alpha1 * rate / self.rate_normalizer_bps
                + self.weights.alpha2 * (1.0 - delay / link.deadline_s).max(0.0);
            compute_used += compute_share;
            bandwidth_used += link.bandwidth_hz;
            elements_used += elements as u64;
            outcomes.push(UserOutcome {
                user_id: i,
                admitted: true,
                ris_assigned: elements > 0,
                ris_elements: elements,
                compute_share,
                rate_bps: rate,
                delay_s: delay,
                utility,
            });
        }
        Ok(AdmissionResult {
            outcomes,
            objective_value: eval.objective,
            ris_utility: eval.ris_utility,
            rejection_penalty: eval.penalty,
            residual_compute: (self.scenario.mec_capacity - compute_used).max(0.0),
            residual_bandwidth: (self.scenario.bandwidth_capacity - bandwidth_used).max(0.0),
            residual_elements: (self.scenario.ris_elements as u64).saturating_sub(elements_used)
                as u32,
        })
    }
}

/// Full admission run: build the pipeline, admit greedily, expand the result.
pub fn run_admission_control(
    scenario: &Scenario,
    weights: &UtilityWeights,
    thresholds: &Thresholds,
    channel_cfg: &ChannelConfig,
) -> Result<AdmissionResult> {
    let pipeline = AdmissionPipeline::new(scenario, weights, thresholds, channel_cfg)?;
    let admitted = pipeline.greedy();
    pipeline.materialize(&admitted)
}
