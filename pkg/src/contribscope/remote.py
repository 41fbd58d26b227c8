"""HTTP client for remote yes/no label classification.

The server contract is one POST per label over a batch of sentences:

    POST {endpoint}/classify
    {"sentences": [...], "label": "k-task",
     "shots": [{"text": ..., "answer": "yes"}, ...]}
    -> {"answers": ["yes" | "no" | ...]}  (one per sentence)

Failed requests are retried a bounded number of times; the final error
carries whatever per-label answers were already collected. Responses
that parse as neither yes nor no count as abstentions and are treated
as "no" so the resulting label sets stay well defined.
"""

from __future__ import annotations

import json
import logging
import os
import time
import urllib.error
import urllib.request
from dataclasses import dataclass

from .errors import TransportError
from .prompts import PromptTemplate, Response, parse_yes_no, template_for
from .taxonomy import ALL_LABELS, ContributionLabel, LabelSet

logger = logging.getLogger(__name__)

API_KEY_ENV = "CONTRIBSCOPE_API_KEY"


@dataclass(frozen=True)
class RemoteConfig:
    endpoint: str
    timeout_ms: int = 10_000
    retries: int = 2
    backoff_s: float = 0.1


@dataclass
class RemoteResult:
    label_sets: list[LabelSet]
    raw: list[dict[str, str]]  # per sentence: label name -> raw answer text
    abstains: int = 0


def _post_json(config: RemoteConfig, path: str, payload: dict) -> dict:
    url = config.endpoint.rstrip("/") + path
    body = json.dumps(payload).encode("utf-8")
    headers = {"Content-Type": "application/json"}
    api_key = os.environ.get(API_KEY_ENV)
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"
    request = urllib.request.Request(url, data=body, headers=headers, method="POST")
    with urllib.request.urlopen(request, timeout=config.timeout_ms / 1000.0) as response:
        return json.loads(response.read().decode("utf-8"))


def _classify_one_label(
    config: RemoteConfig, sentences: list[str], template: PromptTemplate
) -> list[str]:
    payload = {
        "sentences": sentences,
        "label": str(template.label),
        "shots": [{"text": s.text, "answer": s.answer_word} for s in template.shots],
    }
    last_error: Exception | None = None
    for attempt in range(config.retries + 1):
        if attempt > 0:
            time.sleep(config.backoff_s * attempt)
        try:
            reply = _post_json(config, "/classify", payload)
        except (urllib.error.URLError, TimeoutError, OSError, json.JSONDecodeError) as exc:
            last_error = exc
            logger.warning(
                "request for %s failed (attempt %d/%d): %s",
                template.label, attempt + 1, config.retries + 1, exc,
            )
            continue
        answers = reply.get("answers") if isinstance(reply, dict) else None
        if not isinstance(answers, list) or len(answers) != len(sentences):
            last_error = ValueError(f"malformed reply for {template.label}: {reply!r:.200}")
            logger.warning("%s", last_error)
            continue
        return [str(a) for a in answers]
    raise TransportError(
        f"classification request for {template.label} failed after "
        f"{config.retries + 1} attempts: {last_error}"
    )


def remote_classify(
    config: RemoteConfig,
    sentences: list[str],
    templates: list[PromptTemplate] | None = None,
) -> RemoteResult:
    """Query every (sentence, label) pair and assemble label sets.

    On transport failure the raised error's ``partial`` holds the
    per-label answer lists collected before the failure.
    """
    if templates is None:
        templates = [template_for(label) for label in ALL_LABELS]
    collected: dict[str, list[str]] = {}
    for template in templates:
        try:
            collected[str(template.label)] = _classify_one_label(config, sentences, template)
        except TransportError as exc:
            exc.partial = collected
            raise
    result = RemoteResult(
        label_sets=[frozenset() for _ in sentences],
        raw=[{} for _ in sentences],
    )
    assembled: list[set[ContributionLabel]] = [set() for _ in sentences]
    for template in templates:
        answers = collected[str(template.label)]
        for i, answer in enumerate(answers):
            result.raw[i][str(template.label)] = answer
            verdict = parse_yes_no(answer)
            if verdict is Response.ASSERTED:
                assembled[i].add(template.label)
            elif verdict is Response.ABSTAIN:
                result.abstains += 1
    result.label_sets = [frozenset(s) for s in assembled]
    if result.abstains:
        logger.warning("%d responses were neither yes nor no; treated as no", result.abstains)
    return result
