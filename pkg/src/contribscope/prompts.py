"""Yes/no prompt templates for querying a text model about one label.

Each label has a fixed instruction asking whether a sentence makes that
kind of contribution, answered "yes" or "no". Prompts carry up to five
worked demonstrations before the query sentence.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field as dataclass_field

from .errors import DataError
from .taxonomy import ContributionLabel

MAX_SHOTS = 5

_INSTRUCTIONS: dict[ContributionLabel, str] = {
    ContributionLabel.K_TASK: (
        "Central to NLP research are tasks such as Machine Translation, Named Entity "
        "Recognition, Language Modeling, etc. Your task is to assess whether the provided "
        "sentence from an NLP research paper describes new knowledge about any of such "
        "existing NLP tasks, including new knowledge about their properties or "
        "characteristics. However, the sentence should not propose a new NLP task. Respond "
        'with "yes" if the sentence presents new knowledge about one or more of these NLP '
        'tasks; otherwise, respond with "no".'
    ),
    ContributionLabel.K_METHOD: (
        "NLP Models such as RNNs, LSTMs or LLMs are indispensable for NLP Research. Your "
        "task is to determine if the provided sentence from an NLP research paper describes "
        "new knowledge or analysis about such existing NLP models or methods like RNNs, "
        "LSTMs, or LLMs. However, the sentence should not propose new models or methods. "
        'Respond with "yes" if the sentence presents new knowledge about NLP models; '
        'otherwise, respond with "no."'
    ),
    ContributionLabel.K_PEOPLE: (
        "In NLP research, every paper plays a role in advancing the field. Your task is to "
        "assess whether the given sentence from an NLP research paper presents new knowledge "
        'about people, humankind, society or human civilization. Respond with "yes" if the '
        "sentence describes novel knowledge about people, humankind, society or human "
        'civilization; otherwise, respond with "no." Use only a yes or no format for your '
        "answers."
    ),
    ContributionLabel.K_DATASET: (
        "Datasets constitute a crucial aspect of NLP and machine learning research. "
        "Examining datasets can yield valuable insights into their properties and features. "
        "Your task is to assess whether the given sentence from an NLP research paper "
        "describes new knowledge about a dataset, such as its new properties or "
        "characteristics or describes new knowledge concerning properties or characteristics "
        'of datasets in general. Respond with "yes" if the sentence presents novel knowledge '
        'about the datasets; otherwise, respond with "no." Use only a yes or no format for '
        "your answers."
    ),
    ContributionLabel.K_LANGUAGE: (
        "In NLP research, every paper plays a role in advancing the field. Your task is to "
        "assess whether the given sentence from an NLP research paper presents new knowledge "
        "about language, such as a new property or characteristic of language. Respond with "
        '"yes" if the sentence describes novel knowledge about language; otherwise, respond '
        'with "no." Use only a yes or no format for your answers.'
    ),
    ContributionLabel.A_TASK: (
        "Central to NLP research are tasks such as machine translation, named entity "
        "recognition, sentiment classification, and more. Your task is to assess if the "
        "given sentence from an NLP research paper introduces, or proposes a new or novel "
        "NLP task. This new task could either build upon existing NLP tasks or could be "
        'entirely novel. Respond with "yes" if the sentence introduces, or proposes a new or '
        'novel NLP task; otherwise, respond with "no."'
    ),
    ContributionLabel.A_METHOD: (
        "Algorithms and NLP models such as RNNs, LSTMs or LLMs are indispensable for NLP "
        "Research. Your task is to assess if the provided sentence from an NLP research "
        "paper introducing, or proposing a new or novel such NLP model, algorithm, or "
        "technique. This new model could have been built on top of existing models or "
        'methods or could be a completely new model. Respond with "yes" if the sentence '
        'introduces or proposes a new or novel NLP model; otherwise, respond with "no."'
    ),
    ContributionLabel.A_DATASET: (
        "Datasets constitute a crucial aspect of NLP research. Your task is to assess "
        "whether the given sentence from an NLP research paper introduces or discusses a new "
        'or novel NLP dataset. Respond with "yes" if it does; otherwise, respond with "no."'
    ),
}


class Response(enum.Enum):
    ASSERTED = "asserted"
    DENIED = "denied"
    ABSTAIN = "abstain"


@dataclass(frozen=True)
class Shot:
    text: str
    answer: bool  # True: yes

    @property
    def answer_word(self) -> str:
        return "yes" if self.answer else "no"


@dataclass(frozen=True)
class PromptTemplate:
    label: ContributionLabel
    instruction: str
    shots: tuple[Shot, ...] = dataclass_field(default=())

    def __post_init__(self):
        if len(self.shots) > MAX_SHOTS:
            raise DataError(f"at most {MAX_SHOTS} shots are supported, got {len(self.shots)}")
        if '"yes"' not in self.instruction or '"no' not in self.instruction:
            raise DataError(f"instruction for {self.label} lacks a yes/no answer directive")


def instruction_for(label: ContributionLabel) -> str:
    return _INSTRUCTIONS[label]


def template_for(label: ContributionLabel, shots: tuple[Shot, ...] = ()) -> PromptTemplate:
    return PromptTemplate(label=label, instruction=instruction_for(label), shots=shots)


def build_prompt(label: ContributionLabel, shots, sentence: str) -> str:
    """Instruction, then demonstrations, then the query with an answer cue."""
    template = template_for(label, tuple(shots))
    parts = [template.instruction]
    for shot in template.shots:
        parts.append(f"Sentence: {shot.text}\nAnswer: {shot.answer_word}")
    parts.append(f"Sentence: {sentence}\nAnswer:")
    return "\n\n".join(parts)


_LEADING_ANSWER = re.compile(r"\W*(yes|no)\b", re.IGNORECASE)


def parse_yes_no(response: str) -> Response:
    """Leading yes/no after stripping punctuation and whitespace; else abstain."""
    match = _LEADING_ANSWER.match(response)
    if match is None:
        return Response.ABSTAIN
    return Response.ASSERTED if match.group(1).lower() == "yes" else Response.DENIED
