pub mod campaigns;
pub mod canonical;
pub mod enumerate;
pub mod fixtures;

pub use canonical::{canonical_label, SolutionClass};
pub use enumerate::{enumerate_gamma_bijective, enumerate_nondegenerate, enumerate_nondegenerate_pruned, CandidateSpace};
pub use campaigns::{campaign_cocycle, campaign_growth, campaign_main_irr, campaign_rump, CampaignReport, Violation};
