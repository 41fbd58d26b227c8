from __future__ import annotations

import pytest

from contribscope.errors import DataError
from contribscope.prompts import (
    MAX_SHOTS,
    Response,
    Shot,
    build_prompt,
    instruction_for,
    parse_yes_no,
    template_for,
)
from contribscope.taxonomy import ALL_LABELS, ContributionLabel


def test_every_label_has_an_instruction():
    for label in ALL_LABELS:
        text = instruction_for(label)
        assert '"yes"' in text
        assert '"no' in text
        assert "sentence" in text.lower()


def test_instruction_wording_is_label_specific():
    assert instruction_for(ContributionLabel.K_TASK).startswith(
        "Central to NLP research are tasks such as Machine Translation"
    )
    assert "should not propose a new NLP task" in instruction_for(ContributionLabel.K_TASK)
    assert "introduces, or proposes a new or novel NLP task" in instruction_for(
        ContributionLabel.A_TASK
    )
    assert "people, humankind, society or human civilization" in instruction_for(
        ContributionLabel.K_PEOPLE
    )
    assert len({instruction_for(label) for label in ALL_LABELS}) == len(ALL_LABELS)


def test_prompt_layout_with_shots():
    shots = [Shot("A tagger is released.", True), Shot("We thank reviewers.", False)]
    prompt = build_prompt(ContributionLabel.A_METHOD, shots, "We propose a parser.")
    blocks = prompt.split("\n\n")
    assert blocks[0] == instruction_for(ContributionLabel.A_METHOD)
    assert blocks[1] == "Sentence: A tagger is released.\nAnswer: yes"
    assert blocks[2] == "Sentence: We thank reviewers.\nAnswer: no"
    assert blocks[3] == "Sentence: We propose a parser.\nAnswer:"
    assert prompt.endswith("Answer:")


def test_zero_shot_prompt_has_two_blocks():
    prompt = build_prompt(ContributionLabel.K_DATASET, [], "The corpus is skewed.")
    assert prompt.count("Sentence:") == 1
    assert prompt.split("\n\n")[0] == instruction_for(ContributionLabel.K_DATASET)


def test_too_many_shots_rejected():
    shots = [Shot(f"s{i}", i % 2 == 0) for i in range(MAX_SHOTS + 1)]
    with pytest.raises(DataError, match="at most"):
        build_prompt(ContributionLabel.K_TASK, shots, "x")
    # exactly MAX_SHOTS is fine
    build_prompt(ContributionLabel.K_TASK, shots[:MAX_SHOTS], "x")


def test_template_rejects_instruction_without_answer_directive():
    template = template_for(ContributionLabel.K_TASK)
    with pytest.raises(DataError, match="directive"):
        type(template)(label=template.label, instruction="Say something.", shots=())


@pytest.mark.parametrize(
    ("reply", "expected"),
    [
        ("yes", Response.ASSERTED),
        ("Yes.", Response.ASSERTED),
        (" YES, absolutely", Response.ASSERTED),
        ('"no"', Response.DENIED),
        ("no, the sentence is background", Response.DENIED),
        ("No", Response.DENIED),
        ("yesterday it worked", Response.ABSTAIN),
        ("nothing to report", Response.ABSTAIN),
        ("Note: unclear", Response.ABSTAIN),
        ("maybe", Response.ABSTAIN),
        ("", Response.ABSTAIN),
        ("  \n yes", Response.ASSERTED),
    ],
)
def test_parse_yes_no(reply, expected):
    assert parse_yes_no(reply) == expected


def test_shot_answer_word():
    assert Shot("x", True).answer_word == "yes"
    assert Shot("x", False).answer_word == "no"
