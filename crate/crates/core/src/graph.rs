//! Typed in-memory representation of the scholarly network.
//!
//! Four node kinds with dense per-kind indices, five edge sets, and
//! adjacency indices for every direction the ranking formulas need.
//! [`ScholGraph`] is immutable once built; construction sorts node tables by
//! external id and all adjacency lists by index, so the same records in any
//! order produce an identical graph.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

/// Node kind discriminator, used in errors and warnings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Article,
    Author,
    Journal,
    Topic,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NodeKind::Article => "article",
            NodeKind::Author => "author",
            NodeKind::Journal => "journal",
            NodeKind::Topic => "topic",
        };
        f.write_str(s)
    }
}

macro_rules! node_id {
    ($name:ident) => {
        /// Dense per-kind node index.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub u32);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }
    };
}

node_id!(ArticleId);
node_id!(AuthorId);
node_id!(JournalId);
node_id!(TopicId);

/// Article payload. `citation_count_raw` is the citation count reported by
/// the source corpus, before any subgraph cut; it is what the min-citation
/// filter and the citation-count ranking use.
#[derive(Debug, Clone, PartialEq)]
pub struct Article {
    pub external_id: String,
    pub title: String,
    pub year: i32,
    pub abstract_present: bool,
    pub citation_count_raw: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Author {
    pub external_id: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Journal {
    pub external_id: String,
    pub name: String,
}

/// A concept node. `cui` is the concept unique identifier; `type_id` the
/// semantic-type code that ingest filtering validates against the
/// retained/discarded tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Topic {
    pub cui: String,
    pub type_id: String,
    pub preferred_name: String,
}

/// Edge lists by external id, the input side of [`build_graph`].
///
/// `topicality` pairs are (article external id, cui). `topic_hierarchy` is
/// stored but never consumed by ranking.
#[derive(Debug, Clone, Default)]
pub struct EdgeRecords {
    pub citations: Vec<(String, String)>,
    pub authorship: Vec<(String, String)>,
    pub publication: Vec<(String, String)>,
    pub topicality: Vec<(String, String)>,
    pub topic_hierarchy: Vec<(String, String)>,
}

/// Resolved edge lists over dense ids, sorted canonically.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EdgeSets {
    pub citations: Vec<(ArticleId, ArticleId)>,
    pub authorship: Vec<(ArticleId, AuthorId)>,
    pub publication: Vec<(ArticleId, JournalId)>,
    pub topicality: Vec<(ArticleId, TopicId)>,
    pub topic_hierarchy: Vec<(TopicId, TopicId)>,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: NodeKind, id: String },
    #[error("{edge_set} edge references unknown {kind} id {id:?}")]
    DanglingEdgeEndpoint {
        edge_set: &'static str,
        kind: NodeKind,
        id: String,
    },
    #[error("article {article:?} has more than one journal ({first:?}, {second:?})")]
    MultipleJournals {
        article: String,
        first: String,
        second: String,
    },
    #[error("article {article:?} cites itself")]
    SelfCitation { article: String },
    #[error("duplicate {edge_set} edge {from:?} -> {to:?}")]
    DuplicateEdge {
        edge_set: &'static str,
        from: String,
        to: String,
    },
    #[error("graph has no articles and no t_current override")]
    EmptyGraph,
    #[error("article {article:?} has year {year}, expected year > 0")]
    InvalidYear { article: String, year: i32 },
    #[error("t_current {t_current} is before the newest article year {max_year}")]
    TCurrentTooEarly { t_current: i32, max_year: i32 },
}

/// The four-layer network plus adjacency indices.
///
/// Adjacency lists are sorted and exactly mirror [`EdgeSets`]; `neighborhood`
/// is the deduplicated union of in- and out-citations per article.
#[derive(Debug, Clone)]
pub struct ScholGraph {
    articles: Vec<Article>,
    authors: Vec<Author>,
    journals: Vec<Journal>,
    topics: Vec<Topic>,
    edges: EdgeSets,

    in_citations: Vec<Vec<ArticleId>>,
    out_citations: Vec<Vec<ArticleId>>,
    neighborhood: Vec<Vec<ArticleId>>,
    article_authors: Vec<Vec<AuthorId>>,
    article_journal: Vec<Option<JournalId>>,
    article_topics: Vec<Vec<TopicId>>,
    author_articles: Vec<Vec<ArticleId>>,
    journal_articles: Vec<Vec<ArticleId>>,
    topic_articles: Vec<Vec<ArticleId>>,

    article_by_ext: HashMap<String, ArticleId>,
    author_by_ext: HashMap<String, AuthorId>,
    journal_by_ext: HashMap<String, JournalId>,
    topic_by_cui: HashMap<String, TopicId>,

    t_current: i32,
}

/// Builds a validated graph.
///
/// Node tables are sorted by external id (cui for topics) before indexing, so
/// input order never affects the result. `t_current` defaults to the newest
/// article year; the override exists for historical snapshots and for empty
/// graphs, which are otherwise rejected.
pub fn build_graph(
    articles: Vec<Article>,
    authors: Vec<Author>,
    journals: Vec<Journal>,
    topics: Vec<Topic>,
    edges: EdgeRecords,
    t_current_override: Option<i32>,
) -> Result<ScholGraph, GraphError> {
    let mut articles = articles;
    let mut authors = authors;
    let mut journals = journals;
    let mut topics = topics;

    articles.sort_by(|a, b| a.external_id.cmp(&b.external_id));
    authors.sort_by(|a, b| a.external_id.cmp(&b.external_id));
    journals.sort_by(|a, b| a.external_id.cmp(&b.external_id));
    topics.sort_by(|a, b| a.cui.cmp(&b.cui));

    for a in &articles {
        if a.year <= 0 {
            return Err(GraphError::InvalidYear {
                article: a.external_id.clone(),
                year: a.year,
            });
        }
    }

    let article_by_ext = index_unique(NodeKind::Article, articles.iter().map(|a| &a.external_id))?
        .into_iter()
        .map(|(k, v)| (k, ArticleId(v)))
        .collect::<HashMap<_, _>>();
    let author_by_ext = index_unique(NodeKind::Author, authors.iter().map(|a| &a.external_id))?
        .into_iter()
        .map(|(k, v)| (k, AuthorId(v)))
        .collect::<HashMap<_, _>>();
    let journal_by_ext = index_unique(NodeKind::Journal, journals.iter().map(|j| &j.external_id))?
        .into_iter()
        .map(|(k, v)| (k, JournalId(v)))
        .collect::<HashMap<_, _>>();
    let topic_by_cui = index_unique(NodeKind::Topic, topics.iter().map(|t| &t.cui))?
        .into_iter()
        .map(|(k, v)| (k, TopicId(v)))
        .collect::<HashMap<_, _>>();

    let max_year = articles.iter().map(|a| a.year).max();
    let t_current = match (t_current_override, max_year) {
        (Some(t), Some(max)) => {
            if t < max {
                return Err(GraphError::TCurrentTooEarly {
                    t_current: t,
                    max_year: max,
                });
            }
            t
        }
        (Some(t), None) => t,
        (None, Some(max)) => max,
        (None, None) => return Err(GraphError::EmptyGraph),
    };

    let lookup_article = |edge_set: &'static str, id: &str| -> Result<ArticleId, GraphError> {
        article_by_ext
            .get(id)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set,
                kind: NodeKind::Article,
                id: id.to_string(),
            })
    };

    // Citations.
    let mut citations = Vec::with_capacity(edges.citations.len());
    let mut seen_cit: HashSet<(ArticleId, ArticleId)> = HashSet::new();
    for (citing, cited) in &edges.citations {
        let c = lookup_article("citation", citing)?;
        let d = lookup_article("citation", cited)?;
        if c == d {
            return Err(GraphError::SelfCitation {
                article: citing.clone(),
            });
        }
        if !seen_cit.insert((c, d)) {
            return Err(GraphError::DuplicateEdge {
                edge_set: "citation",
                from: citing.clone(),
                to: cited.clone(),
            });
        }
        citations.push((c, d));
    }

    // Authorship.
    let mut authorship = Vec::with_capacity(edges.authorship.len());
    let mut seen_auth: HashSet<(ArticleId, AuthorId)> = HashSet::new();
    for (art, aut) in &edges.authorship {
        let p = lookup_article("authorship", art)?;
        let a = author_by_ext
            .get(aut)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set: "authorship",
                kind: NodeKind::Author,
                id: aut.clone(),
            })?;
        if !seen_auth.insert((p, a)) {
            return Err(GraphError::DuplicateEdge {
                edge_set: "authorship",
                from: art.clone(),
                to: aut.clone(),
            });
        }
        authorship.push((p, a));
    }

    // Publication: at most one journal per article.
    let mut publication = Vec::with_capacity(edges.publication.len());
    let mut journal_of: HashMap<ArticleId, (JournalId, &String)> = HashMap::new();
    for (art, jou) in &edges.publication {
        let p = lookup_article("publication", art)?;
        let j = journal_by_ext
            .get(jou)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set: "publication",
                kind: NodeKind::Journal,
                id: jou.clone(),
            })?;
        match journal_of.get(&p) {
            Some(&(prev, prev_ext)) if prev == j => {
                return Err(GraphError::DuplicateEdge {
                    edge_set: "publication",
                    from: art.clone(),
                    to: prev_ext.clone(),
                });
            }
            Some(&(_, prev_ext)) => {
                return Err(GraphError::MultipleJournals {
                    article: art.clone(),
                    first: prev_ext.clone(),
                    second: jou.clone(),
                });
            }
            None => {
                journal_of.insert(p, (j, jou));
                publication.push((p, j));
            }
        }
    }

    // Topicality.
    let mut topicality = Vec::with_capacity(edges.topicality.len());
    let mut seen_top: HashSet<(ArticleId, TopicId)> = HashSet::new();
    for (art, cui) in &edges.topicality {
        let p = lookup_article("topicality", art)?;
        let t = topic_by_cui
            .get(cui)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set: "topicality",
                kind: NodeKind::Topic,
                id: cui.clone(),
            })?;
        if !seen_top.insert((p, t)) {
            return Err(GraphError::DuplicateEdge {
                edge_set: "topicality",
                from: art.clone(),
                to: cui.clone(),
            });
        }
        topicality.push((p, t));
    }

    // Topic hierarchy: stored, never consumed by ranking.
    let mut topic_hierarchy = Vec::with_capacity(edges.topic_hierarchy.len());
    let mut seen_hier: HashSet<(TopicId, TopicId)> = HashSet::new();
    for (a, b) in &edges.topic_hierarchy {
        let ta = topic_by_cui
            .get(a)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set: "topic_hierarchy",
                kind: NodeKind::Topic,
                id: a.clone(),
            })?;
        let tb = topic_by_cui
            .get(b)
            .copied()
            .ok_or_else(|| GraphError::DanglingEdgeEndpoint {
                edge_set: "topic_hierarchy",
                kind: NodeKind::Topic,
                id: b.clone(),
            })?;
        if !seen_hier.insert((ta, tb)) {
            return Err(GraphError::DuplicateEdge {
                edge_set: "topic_hierarchy",
                from: a.clone(),
                to: b.clone(),
            });
        }
        topic_hierarchy.push((ta, tb));
    }

    citations.sort_unstable();
    authorship.sort_unstable();
    publication.sort_unstable();
    topicality.sort_unstable();
    topic_hierarchy.sort_unstable();

    let edges = EdgeSets {
        citations,
        authorship,
        publication,
        topicality,
        topic_hierarchy,
    };

    let n_art = articles.len();
    let mut in_citations = vec![Vec::new(); n_art];
    let mut out_citations = vec![Vec::new(); n_art];
    for &(c, d) in &edges.citations {
        out_citations[c.index()].push(d);
        in_citations[d.index()].push(c);
    }
    let mut article_authors = vec![Vec::new(); n_art];
    let mut author_articles = vec![Vec::new(); authors.len()];
    for &(p, a) in &edges.authorship {
        article_authors[p.index()].push(a);
        author_articles[a.index()].push(p);
    }
    let mut article_journal = vec![None; n_art];
    let mut journal_articles = vec![Vec::new(); journals.len()];
    for &(p, j) in &edges.publication {
        article_journal[p.index()] = Some(j);
        journal_articles[j.index()].push(p);
    }
    let mut article_topics = vec![Vec::new(); n_art];
    let mut topic_articles = vec![Vec::new(); topics.len()];
    for &(p, t) in &edges.topicality {
        article_topics[p.index()].push(t);
        topic_articles[t.index()].push(p);
    }

    for list in in_citations
        .iter_mut()
        .chain(out_citations.iter_mut())
        .chain(author_articles.iter_mut())
        .chain(journal_articles.iter_mut())
        .chain(topic_articles.iter_mut())
    {
        list.sort_unstable();
    }
    for list in article_authors.iter_mut() {
        list.sort_unstable();
    }
    for list in article_topics.iter_mut() {
        list.sort_unstable();
    }

    let neighborhood = (0..n_art)
        .map(|i| {
            let mut n: Vec<ArticleId> = in_citations[i]
                .iter()
                .chain(out_citations[i].iter())
                .copied()
                .collect();
            n.sort_unstable();
            n.dedup();
            n
        })
        .collect();

    Ok(ScholGraph {
        articles,
        authors,
        journals,
        topics,
        edges,
        in_citations,
        out_citations,
        neighborhood,
        article_authors,
        article_journal,
        article_topics,
        author_articles,
        journal_articles,
        topic_articles,
        article_by_ext: article_by_ext
            .into_iter()
            .map(|(k, v)| (k.clone(), v))
            .collect(),
        author_by_ext: author_by_ext.into_iter().map(|(k, v)| (k.clone(), v)).collect(),
        journal_by_ext: journal_by_ext
            .into_iter()
            .map(|(k, v)| (k.clone(), v))
            .collect(),
        topic_by_cui: topic_by_cui.into_iter().map(|(k, v)| (k.clone(), v)).collect(),
        t_current,
    })
}

fn index_unique<'a, I>(kind: NodeKind, ids: I) -> Result<HashMap<&'a String, u32>, GraphError>
where
    I: Iterator<Item = &'a String>,
{
    let mut map = HashMap::new();
    for (i, id) in ids.enumerate() {
        if map.insert(id, i as u32).is_some() {
            return Err(GraphError::DuplicateId {
                kind,
                id: id.clone(),
            });
        }
    }
    Ok(map)
}

impl ScholGraph {
    pub fn n_articles(&self) -> usize {
        self.articles.len()
    }
    pub fn n_authors(&self) -> usize {
        self.authors.len()
    }
    pub fn n_journals(&self) -> usize {
        self.journals.len()
    }
    pub fn n_topics(&self) -> usize {
        self.topics.len()
    }

    pub fn article(&self, id: ArticleId) -> &Article {
        &self.articles[id.index()]
    }
    pub fn author(&self, id: AuthorId) -> &Author {
        &self.authors[id.index()]
    }
    pub fn journal(&self, id: JournalId) -> &Journal {
        &self.journals[id.index()]
    }
    pub fn topic(&self, id: TopicId) -> &Topic {
        &self.topics[id.index()]
    }

    pub fn articles(&self) -> &[Article] {
        &self.articles
    }
    pub fn authors(&self) -> &[Author] {
        &self.authors
    }
    pub fn journals(&self) -> &[Journal] {
        &self.journals
    }
    pub fn topics(&self) -> &[Topic] {
        &self.topics
    }
    pub fn edges(&self) -> &EdgeSets {
        &self.edges
    }
    pub fn t_current(&self) -> i32 {
        self.t_current
    }

    pub fn article_by_external_id(&self, id: &str) -> Option<ArticleId> {
        self.article_by_ext.get(id).copied()
    }
    pub fn author_by_external_id(&self, id: &str) -> Option<AuthorId> {
        self.author_by_ext.get(id).copied()
    }
    pub fn journal_by_external_id(&self, id: &str) -> Option<JournalId> {
        self.journal_by_ext.get(id).copied()
    }
    pub fn topic_by_cui(&self, cui: &str) -> Option<TopicId> {
        self.topic_by_cui.get(cui).copied()
    }

    /// In(P): articles citing `id`.
    pub fn in_citations(&self, id: ArticleId) -> &[ArticleId] {
        &self.in_citations[id.index()]
    }
    /// Out(P): articles cited by `id`.
    pub fn out_citations(&self, id: ArticleId) -> &[ArticleId] {
        &self.out_citations[id.index()]
    }
    /// N(P): deduplicated union of in- and out-citations.
    pub fn neighborhood(&self, id: ArticleId) -> &[ArticleId] {
        &self.neighborhood[id.index()]
    }
    /// A(P): authors of the article.
    pub fn authors_of(&self, id: ArticleId) -> &[AuthorId] {
        &self.article_authors[id.index()]
    }
    /// J(P): the article's journal, if any.
    pub fn journal_of(&self, id: ArticleId) -> Option<JournalId> {
        self.article_journal[id.index()]
    }
    /// T(P): topics of the article.
    pub fn topics_of(&self, id: ArticleId) -> &[TopicId] {
        &self.article_topics[id.index()]
    }
    /// L(A): articles published by the author.
    pub fn articles_of_author(&self, id: AuthorId) -> &[ArticleId] {
        &self.author_articles[id.index()]
    }
    /// K(J): articles published in the journal.
    pub fn articles_of_journal(&self, id: JournalId) -> &[ArticleId] {
        &self.journal_articles[id.index()]
    }
    /// M(T): articles related to the topic.
    pub fn articles_of_topic(&self, id: TopicId) -> &[ArticleId] {
        &self.topic_articles[id.index()]
    }

    /// Age of the article in years relative to `t_current`. Never negative.
    pub fn article_age(&self, id: ArticleId) -> u32 {
        (self.t_current - self.articles[id.index()].year) as u32
    }

    /// Keeps exactly the articles with `citation_count_raw >= k`, citation
    /// edges with both endpoints surviving, and attribute nodes that retain
    /// at least one edge. `t_current` carries over, which makes the operation
    /// idempotent and keeps time weights comparable with the parent graph.
    pub fn subgraph_by_min_citations(&self, k: u32) -> ScholGraph {
        let keep: Vec<bool> = self
            .articles
            .iter()
            .map(|a| a.citation_count_raw >= k)
            .collect();

        let articles: Vec<Article> = self
            .articles
            .iter()
            .zip(&keep)
            .filter(|(_, &kept)| kept)
            .map(|(a, _)| a.clone())
            .collect();
        let kept_ext: HashSet<&str> = articles.iter().map(|a| a.external_id.as_str()).collect();

        let ext = |id: ArticleId| self.articles[id.index()].external_id.clone();

        let mut records = EdgeRecords::default();
        for &(c, d) in &self.edges.citations {
            if keep[c.index()] && keep[d.index()] {
                records.citations.push((ext(c), ext(d)));
            }
        }

        let mut used_authors: HashSet<AuthorId> = HashSet::new();
        for &(p, a) in &self.edges.authorship {
            if keep[p.index()] {
                records
                    .authorship
                    .push((ext(p), self.authors[a.index()].external_id.clone()));
                used_authors.insert(a);
            }
        }
        let mut used_journals: HashSet<JournalId> = HashSet::new();
        for &(p, j) in &self.edges.publication {
            if keep[p.index()] {
                records
                    .publication
                    .push((ext(p), self.journals[j.index()].external_id.clone()));
                used_journals.insert(j);
            }
        }
        let mut used_topics: HashSet<TopicId> = HashSet::new();
        for &(p, t) in &self.edges.topicality {
            if keep[p.index()] {
                records
                    .topicality
                    .push((ext(p), self.topics[t.index()].cui.clone()));
                used_topics.insert(t);
            }
        }
        for &(a, b) in &self.edges.topic_hierarchy {
            if used_topics.contains(&a) && used_topics.contains(&b) {
                records.topic_hierarchy.push((
                    self.topics[a.index()].cui.clone(),
                    self.topics[b.index()].cui.clone(),
                ));
            }
        }

        let authors: Vec<Author> = self
            .authors
            .iter()
            .enumerate()
            .filter(|(i, _)| used_authors.contains(&AuthorId(*i as u32)))
            .map(|(_, a)| a.clone())
            .collect();
        let journals: Vec<Journal> = self
            .journals
            .iter()
            .enumerate()
            .filter(|(i, _)| used_journals.contains(&JournalId(*i as u32)))
            .map(|(_, j)| j.clone())
            .collect();
        let topics: Vec<Topic> = self
            .topics
            .iter()
            .enumerate()
            .filter(|(i, _)| used_topics.contains(&TopicId(*i as u32)))
            .map(|(_, t)| t.clone())
            .collect();

        debug_assert!(records
            .citations
            .iter()
            .all(|(c, d)| kept_ext.contains(c.as_str()) && kept_ext.contains(d.as_str())));

        // Input came from a valid graph, so rebuild cannot fail.
        build_graph(
            articles,
            authors,
            journals,
            topics,
            records,
            Some(self.t_current),
        )
        .expect("subgraph of a valid graph is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn art(id: &str, year: i32, cites: u32) -> Article {
        Article {
            external_id: id.to_string(),
            title: format!("title {id}"),
            year,
            abstract_present: false,
            citation_count_raw: cites,
        }
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    /// Three articles, citations P2->P1, P3->P1, P3->P2, years 2020/2021/2021.
    pub(crate) fn tri_fixture() -> ScholGraph {
        build_graph(
            vec![art("P1", 2020, 10), art("P2", 2021, 5), art("P3", 2021, 2)],
            vec![
                Author {
                    external_id: "a1".into(),
                    name: "Author One".into(),
                },
                Author {
                    external_id: "a2".into(),
                    name: "Author Two".into(),
                },
            ],
            vec![
                Journal {
                    external_id: "j1".into(),
                    name: "Journal One".into(),
                },
                Journal {
                    external_id: "j2".into(),
                    name: "Journal Two".into(),
                },
            ],
            vec![
                Topic {
                    cui: "C1".into(),
                    type_id: "T047".into(),
                    preferred_name: "t one".into(),
                },
                Topic {
                    cui: "C2".into(),
                    type_id: "T047".into(),
                    preferred_name: "t two".into(),
                },
                Topic {
                    cui: "C3".into(),
                    type_id: "T047".into(),
                    preferred_name: "t three".into(),
                },
            ],
            EdgeRecords {
                citations: pairs(&[("P2", "P1"), ("P3", "P1"), ("P3", "P2")]),
                authorship: pairs(&[("P1", "a1"), ("P2", "a1"), ("P3", "a2")]),
                publication: pairs(&[("P1", "j1"), ("P3", "j2")]),
                topicality: pairs(&[
                    ("P1", "C1"),
                    ("P2", "C1"),
                    ("P3", "C1"),
                    ("P2", "C2"),
                    ("P3", "C3"),
                ]),
                topic_hierarchy: Vec::new(),
            },
            None,
        )
        .unwrap()
    }

    #[test]
    fn tri_fixture_adjacency() {
        let g = tri_fixture();
        let p1 = g.article_by_external_id("P1").unwrap();
        let p2 = g.article_by_external_id("P2").unwrap();
        let p3 = g.article_by_external_id("P3").unwrap();

        assert_eq!(g.in_citations(p1), &[p2, p3]);
        assert_eq!(g.out_citations(p1), &[] as &[ArticleId]);
        assert_eq!(g.neighborhood(p3), &[p1, p2]);
        assert_eq!(g.t_current(), 2021);
        assert_eq!(g.article_age(p1), 1);
        assert_eq!(g.article_age(p2), 0);
    }

    #[test]
    fn empty_graph_requires_override() {
        let err = build_graph(
            vec![],
            vec![],
            vec![],
            vec![],
            EdgeRecords::default(),
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::EmptyGraph));

        let g = build_graph(
            vec![],
            vec![],
            vec![],
            vec![],
            EdgeRecords::default(),
            Some(2021),
        )
        .unwrap();
        assert_eq!(g.n_articles(), 0);
        assert_eq!(g.t_current(), 2021);
    }

    #[test]
    fn dangling_edge_rejected() {
        let err = build_graph(
            vec![art("P1", 2020, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords {
                citations: pairs(&[("P1", "P9")]),
                ..Default::default()
            },
            None,
        )
        .unwrap_err();
        match err {
            GraphError::DanglingEdgeEndpoint { id, .. } => assert_eq!(id, "P9"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn self_citation_rejected() {
        let err = build_graph(
            vec![art("P1", 2020, 0), art("P2", 2020, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords {
                citations: pairs(&[("P1", "P1")]),
                ..Default::default()
            },
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::SelfCitation { .. }));
    }

    #[test]
    fn duplicate_citation_rejected() {
        let err = build_graph(
            vec![art("P1", 2020, 0), art("P2", 2020, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords {
                citations: pairs(&[("P1", "P2"), ("P1", "P2")]),
                ..Default::default()
            },
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::DuplicateEdge { .. }));
    }

    #[test]
    fn duplicate_article_id_rejected() {
        let err = build_graph(
            vec![art("P1", 2020, 0), art("P1", 2021, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords::default(),
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::DuplicateId { .. }));
    }

    #[test]
    fn multiple_journals_rejected() {
        let journals = vec![
            Journal {
                external_id: "j1".into(),
                name: "J1".into(),
            },
            Journal {
                external_id: "j2".into(),
                name: "J2".into(),
            },
        ];
        let err = build_graph(
            vec![art("P1", 2020, 0)],
            vec![],
            journals,
            vec![],
            EdgeRecords {
                publication: pairs(&[("P1", "j1"), ("P1", "j2")]),
                ..Default::default()
            },
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::MultipleJournals { .. }));
    }

    #[test]
    fn zero_year_rejected() {
        let err = build_graph(
            vec![art("P1", 0, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords::default(),
            None,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidYear { .. }));
    }

    #[test]
    fn t_current_override_before_max_year_rejected() {
        let err = build_graph(
            vec![art("P1", 2021, 0)],
            vec![],
            vec![],
            vec![],
            EdgeRecords::default(),
            Some(2019),
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::TCurrentTooEarly { .. }));
    }

    #[test]
    fn min_citation_cut() {
        let g = build_graph(
            vec![art("A", 2020, 25), art("B", 2020, 3), art("C", 2021, 40)],
            vec![],
            vec![],
            vec![],
            EdgeRecords {
                citations: pairs(&[("C", "A"), ("B", "A"), ("C", "B")]),
                ..Default::default()
            },
            None,
        )
        .unwrap();

        let cut = g.subgraph_by_min_citations(20);
        assert_eq!(cut.n_articles(), 2);
        assert!(cut.article_by_external_id("B").is_none());
        assert_eq!(cut.edges().citations.len(), 1);
        let a = cut.article_by_external_id("A").unwrap();
        let c = cut.article_by_external_id("C").unwrap();
        assert_eq!(cut.in_citations(a), &[c]);
        assert_eq!(cut.t_current(), 2021);
    }

    #[test]
    fn min_citation_cut_identity_at_zero() {
        let g = tri_fixture();
        let cut = g.subgraph_by_min_citations(0);
        assert_eq!(cut.n_articles(), g.n_articles());
        assert_eq!(cut.edges(), g.edges());
        assert_eq!(cut.t_current(), g.t_current());
    }

    #[test]
    fn subgraph_drops_unlinked_attribute_nodes() {
        let g = tri_fixture();
        // Only P1 survives: a2, j2, C2, C3 lose all their edges.
        let cut = g.subgraph_by_min_citations(10);
        assert_eq!(cut.n_articles(), 1);
        assert_eq!(cut.n_authors(), 1);
        assert_eq!(cut.n_journals(), 1);
        assert_eq!(cut.n_topics(), 1);
        assert!(cut.author_by_external_id("a1").is_some());
        assert!(cut.topic_by_cui("C1").is_some());
    }

    #[test]
    fn construction_order_invariant() {
        let g1 = tri_fixture();
        // Same records, different order.
        let g2 = build_graph(
            vec![art("P3", 2021, 2), art("P1", 2020, 10), art("P2", 2021, 5)],
            vec![
                Author {
                    external_id: "a2".into(),
                    name: "Author Two".into(),
                },
                Author {
                    external_id: "a1".into(),
                    name: "Author One".into(),
                },
            ],
            vec![
                Journal {
                    external_id: "j2".into(),
                    name: "Journal Two".into(),
                },
                Journal {
                    external_id: "j1".into(),
                    name: "Journal One".into(),
                },
            ],
            vec![
                Topic {
                    cui: "C3".into(),
                    type_id: "T047".into(),
                    preferred_name: "t three".into(),
                },
                Topic {
                    cui: "C1".into(),
                    type_id: "T047".into(),
                    preferred_name: "t one".into(),
                },
                Topic {
                    cui: "C2".into(),
                    type_id: "T047".into(),
                    preferred_name: "t two".into(),
                },
            ],
            EdgeRecords {
                citations: pairs(&[("P3", "P2"), ("P2", "P1"), ("P3", "P1")]),
                authorship: pairs(&[("P3", "a2"), ("P1", "a1"), ("P2", "a1")]),
                publication: pairs(&[("P3", "j2"), ("P1", "j1")]),
                topicality: pairs(&[
                    ("P3", "C3"),
                    ("P2", "C2"),
                    ("P3", "C1"),
                    ("P1", "C1"),
                    ("P2", "C1"),
                ]),
                topic_hierarchy: Vec::new(),
            },
            None,
        )
        .unwrap();

        assert_eq!(g1.edges(), g2.edges());
        assert_eq!(g1.articles(), g2.articles());
        for i in 0..g1.n_articles() {
            let id = ArticleId(i as u32);
            assert_eq!(g1.neighborhood(id), g2.neighborhood(id));
            assert_eq!(g1.authors_of(id), g2.authors_of(id));
        }
    }

    #[test]
    fn adjacency_mirrors_edge_sets() {
        let g = tri_fixture();
        let mut rebuilt: Vec<(ArticleId, ArticleId)> = Vec::new();
        for i in 0..g.n_articles() {
            let id = ArticleId(i as u32);
            for &src in g.in_citations(id) {
                rebuilt.push((src, id));
            }
        }
        rebuilt.sort_unstable();
        assert_eq!(rebuilt, g.edges().citations);

        for i in 0..g.n_articles() {
            let id = ArticleId(i as u32);
            for &a in g.authors_of(id) {
                assert!(g.articles_of_author(a).contains(&id));
            }
            assert_eq!(
                g.neighborhood(id).len(),
                g.in_citations(id)
                    .iter()
                    .chain(g.out_citations(id))
                    .collect::<std::collections::HashSet<_>>()
                    .len()
            );
        }
    }
}
