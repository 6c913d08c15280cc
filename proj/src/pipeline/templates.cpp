// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0

// The template bodies below are external-service prompts reproduced
// character for character, including their original quirks (wording,
// punctuation, doubled braces around JSON examples, backtick-delimited
// slot markers). Do not edit them; downstream parsers and captured
// responses depend on the exact text.

#include "posterkit/pipeline/templates.hpp"

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"

namespace posterkit::pipeline {

namespace {

constexpr const char* kMllmScorer = R"PK(Does this poster contain a large Billing Block or Credit Block at the bottom or "4K ultrahd" text at the top?

Based on your judgment, use the closest option to answer, and only return the label:

A. Yes. There is a large Billing Block or Credit Block at the bottom or "4K ultrahd" text at the top.

B. No. There is no Billing Block or Credit Block at the bottom and no "4K ultrahd" text at the top.
)PK";

constexpr const char* kGeminiCaption = R"PK(Please write a structured and detailed caption in a single paragraph for this poster, covering the following five aspects in order:

Poster Content—Describe what is visually depicted.

Poster Style—Describe the visual or artistic tone, such as cinematic, surreal, minimalist, or other distinct aesthetics.

Poster Text—Provide the exact words shown in the image (title, subtitle, slogan, etc.) and their overall communicative intent.

Text Style and Position—Describe the typography in detail, including font style, size, texture, and how it visually blends or contrasts with the background (e.g., carved into a surface, embedded in light, wrapped by natural objects, etc.); also specify where each piece of text is positioned and its orientation angle in the frame.

Layout—Describe how the all elements are arranged to guide the viewer's focus.

Be specific, descriptive, and cohesive. Keep the response between 200 and 300 words, written as a single paragraph. Avoid listing or enumeration. Do not mention any design tools or generation methods. Write as if for a professional design catalog, highlighting how visual and typographic design choices form a unified and compelling narrative.
)PK";

constexpr const char* kGeminiMask = R"PK(Detect all text regions in the image. For each text region, provide its bounding box in box_2d format [ymin, xmin, ymax, xmax].
The coordinates for each bounding box must be a list of four integers [ymin, xmin, ymax, xmax], normalized to the range [0, 1000]. Ensure the box completely covers the text area.

MANDATORY GUIDELINES:
- The box_2d coordinates [ymin, xmin, ymax, xmax] should be integers normalized to 0-1000.
- If no text is found in the image, the "text_regions" list in the JSON output should be empty.

STRICT CONSTRAINTS:
- Adhere strictly to the JSON output format specified below.
- Do not include any explanations, apologies, or conversational text outside of the JSON structure.
- Ensure the provided normalized coordinates are accurate.

RESPONSE FORMAT:
- Respond with a single JSON object. Do NOT use markdown (e.g., ```json ... ```).
- The JSON object must have a single key "text_regions".
- The value of "text_regions" must be a list of bounding_boxes.
- Each bounding_box must be a list of four integer coordinates [ymin, xmin, ymax, xmax], normalized to [0, 1000].
- Example of the required JSON structure for "text_regions" containing two bounding boxes:
[
  [ymin1, xmin1, ymax1, xmax1],
  [ymin2, xmin2, ymax2, xmax2]
]
- The complete JSON object should look like this:
{
  "text_regions": [
    // List of bounding_boxes as shown above
    // e.g., [[20, 10, 50, 100], [70, 150, 100, 250]]
  ]
}
- If no text is found, the output should be: {"text_regions": []}.
- Provide ONLY this JSON object.

Now, based SOLELY on your comprehensive image analysis, provide ONLY the JSON object detailing all detected text regions and their normalized box_2d coordinates [ymin, xmin, ymax, xmax] as specified.
)PK";

constexpr const char* kAlignmentEval = R"PK(You are an expert in evaluating image content and font style against a given text prompt.
You will be given an image and an original text prompt that was intended to generate an image similar to the one provided.
Your task is to assess whether the image is substantially consistent with the original text prompt based on the criteria below.

Original Text Prompt:
"{original_prompt_text}"

Evaluation Criteria (Prioritized):
1. Text Accuracy:
   - Thoroughly analyze all text visible in the image. Check for any inaccuracies such as typos, missing characters/words, or extra characters/words when compared to the "Original Text Prompt". This is the MOST CRITICAL factor. If ANY such error is found, the decision MUST be "0".
2. Text Style and Positioning:
   - If text is present, does its style (font, color, decoration) and positioning (layout, orientation) in the image reasonably align with what is described or implied in the "Original Text Prompt"?
3. Overall Content, Artistic Style, and Visual Appeal:
   - Does the overall image content (subjects, scene, objects) and artistic style align well with the "Original Text Prompt"?
   - Is the image generally clear, well-composed, and visually appealing in the context of the prompt?

Output Format:
Based on your assessment, output ONLY a JSON object in the following format:
{{"final_decision": "1"}} if the image is substantially consistent with the original prompt across the prioritized criteria (especially if no text errors are found when text is intended) and should be kept.
{{"final_decision": "0"}} if there are ANY discrepancies in Text Accuracy (typos, missing/extra characters/words), or significant issues in other critical criteria, or overall poor alignment, meaning the image should be discarded.

Strict constraints:
- Only output the JSON object.
- Do NOT include any additional text, explanation, or markdown.
- Use exactly "0" or "1" as the value for "final_decision".
)PK";

constexpr const char* kBestOfSix = R"PK(You are a professional Poster Designer. Your task is to evaluate six generated posters based on a design brief ("Original Prompt") and select the single best poster, or indicate if none are suitable.

Evaluation Process:

1. Textual Accuracy (Paramount Importance):
   - First, assess all posters for textual accuracy against the "Original Prompt". Text (if any is specified or implied by the brief) MUST be perfectly accurate:
     - No typographical errors.
     - No missing or extra characters/words.
   - A poster with any textual flaw cannot be chosen as the best IF an alternative poster with perfect text exists.

2. Content Alignment and Aesthetic Value:
   - This criterion is used to select among posters that have passed the textual accuracy check.
   - The chosen poster should:
     - Provide content as close as possible to the "Original Prompt".
     - Demonstrate the highest possible aesthetic value (considering composition, color palette, typography, imagery, and overall visual impact).

Selection Logic:
- Ideal Case: If one or more posters have perfect textual accuracy, select from THIS group the single poster that best meets Criterion 2 (Content Alignment and Aesthetic Value).
- Special Case (All Posters Have Textual Flaws): If ALL six posters have some textual inaccuracies, then no poster meets the primary standard for "best." In this situation, you MUST output "none".
- Fallback Case (This should ideally not be reached if "Special Case" is handled correctly): If the logic leads here unexpectedly after "Special Case" consideration, and no poster has perfect text, but a selection is still forced, choose the poster that, despite its textual flaws, is superior when evaluated SOLELY on Criterion 2 (Content Alignment and Aesthetic Value across all six flawed images). However, prioritize outputting "none" if all have text flaws.

Original Prompt (Design Brief): "{`original_prompt`}"

Select the image ("1", "2", "3", "4", "5", "6", or "none") that best meets these requirements. Respond ONLY with a JSON object in ONE of these exact formats:
{{"best_image": "1"}} OR {{"best_image": "none"}}

Strict constraints:
- Only output the JSON object.
- Do NOT include any additional text or markdown.
- Use exactly "1", "2", "3", "4", "5", "6", or "none" to refer to your selection.
)PK";

constexpr const char* kFeedbackCollection = R"PK(Internally compare the first poster against the second poster, focusing strictly on visual content layout and overall aesthetic style. Based on this internal comparison, provide detailed and specific suggestions in two aspects: 1. Poster Content Suggestions 2. Aesthetic Style Optimization Suggestions.
Act as a professional poster designer. Deliver highly detailed, specific, and actionable feedback in the form of standardized image editing instructions.
MANDATORY GUIDELINES:
- The second poster must be fully followed as the standard. Identify and correct all visual layout and style discrepancies based on this reference.
- Focus exclusively on content and visual/aesthetic design. Completely ignore any issues related to text, typography, wording, spelling, rendering, or text styling.
STRICT CONSTRAINTS:
- NEVER mention the second poster, reference, or target.
- NEVER use comparative phrases such as "similar to the second poster" or "make it like the second poster".
- ONLY describe the editing instructions for Poster 1, framed as standalone improvement tasks.
RESPONSE FORMAT:
Response should be formatted as clearly structured json schema:
{`Poster Content Suggestions`: str, `Aesthetic style optimization suggestions`: str}
Return ONLY the JSON object itself, without any introductory text or markdown formatting.
)PK";

constexpr const char* kOcrEval = R"PK(You are an OCR evaluation assistant. Follow these steps exactly on the attached image:

1. Ground-Truth Extraction (from the design prompt only):
   - Do NOT read text from the image for GT.
   - Parse ONLY the following design prompt and extract ALL text strings that should appear on the poster (titles, subtitles, dates, slogans, venue, etc.), preserving spaces and punctuation exactly:
     `original_prompt_text`
   - Order them in spatial sequence (top→bottom, left→right) and concatenate into raw GT text.

2. OCR Extraction (from the attached image):
   - Run OCR on the provided image and extract ALL rendered text exactly as it appears.
   - Preserve visual reading order (top-left→bottom-right). This is your raw OCR text.

3. Text Normalization (apply to BOTH raw GT and raw OCR before comparison):
   - Convert all letters to lowercase.
   - Remove ALL punctuation characters: .,;:!?'"-()[]{}...`
   - Collapse any sequence of whitespace/newlines into a single space.
   - Trim leading and trailing spaces.

4. Character-Level Alignment & Error Counting:
   - Align the normalized GT text and OCR text character by character.
   - Count four categories:
     - Insertion (I): extra character in OCR not in GT ("more").
     - Deletion (D): GT character missing in OCR ("less").
     - Substitution (S): OCR character differs from GT character ("render error").
     - Correct match (C): identical characters.

5. Metrics Calculation:
   - Let N = total normalized GT characters = C + D + S.
   - Let P = total normalized OCR characters = C + I + S.
   - Let T = total compared characters = C + I + D + S.
   - Character Accuracy = C / T.
   - Text Precision = C / (C + I + S).
   - Text Recall = C / (C + D + S).
   - Text F-score = 2 * Precision * Recall / (Precision + Recall).

6. Final JSON Output (strictly this format, no extra keys or commentary):
{
  "GT_text": "<normalized GT text>",
  "OCR_text": "<normalized OCR text>",
  "total_GT_chars": N,
  "correct_chars": C,
  "insertions": I,
  "deletions": D,
  "substitutions": S,
  "accuracy": "XX.XX%",
  "precision": "YY.YY%",
  "recall": "ZZ.ZZ%",
  "f_score": "WW.WW%"
}
)PK";

constexpr const char* kPreferenceEval = R"PK(Your task is to evaluate a single input image containing two sub-images side-by-side (Left: L, Right: R), both generated from the "Original Prompt". Compare them on Aesthetic Value, Prompt Alignment, Text Accuracy, and Overall Preference.

General Evaluation Protocol:
For each of the four categories:
1. Provide a brief textual analysis justifying your choice.
2. Make a definitive choice: "L" (Left is superior), "R" (Right is superior), or "none".

When to Choose "none":
You must select "none" for a category if:
a) L and R are tied or indistinguishable in quality for that category.
b) The category is not applicable.
c) After careful review, you cannot definitively determine a superior side.
d) Crucially: L and R exhibit clear, offsetting strengths and weaknesses within that specific category. If L excels in one aspect of the category while R excels in another, and these trade-offs make declaring an overall winner for that category difficult or misleading, choose "none". Do not attempt to weigh these distinct, offsetting pros and cons to force a preference.
Your careful judgment is vital.

Original Prompt: "{`original_prompt`}"

Please provide your evaluation in the JSON format specified below.

1. Aesthetic Value:
   - Evaluate visual appeal: harmony and consistency of background style, text style (if present), thematic consistency between background/text, overall content/text layout, and how the artistic style (background, content, text) aligns with the "Original Prompt".
   - `aesthetic_value_explanation`: Your brief analysis.
   - `aesthetic_value`: Choose "L", "R", or "none" (if L/R are equally pleasing/coherent, a choice is impossible, or they exhibit offsetting aesthetic strengths/weaknesses as per the "When to Choose 'none'" protocol).
   - Respond with: {{"aesthetic_value": "L/R/none", "aesthetic_value_explanation": "Your analysis..."}}

2. Prompt Alignment (excluding text elements and artistic style):
   - Evaluate how well non-textual elements (subjects, objects, scene) in L and R match the "Original Prompt".
   - `prompt_alignment_explanation`: Your brief analysis.
   - `prompt_alignment`: Choose "L", "R", or "none" (if L/R align equally well/poorly, it's too close to call, or they exhibit offsetting strengths in alignment as per the "When to Choose 'none'" protocol).
   - Respond with: {{"prompt_alignment": "L/R/none", "prompt_alignment_explanation": "Your analysis..."}}

3. Text Accuracy (if applicable):
   - Evaluate text in L and R based only on textual content specified/implied in the "Original Prompt".
   - Focus only on:
     - Accuracy: All prompt-specified words/characters present, no typos/misspellings/alterations?
     - Recall: All intended textual elements from prompt included? Any missing words/phrases?
   - Ignore text style, font, visual appeal, legibility (unless it prevents determining accuracy/recall), and placement.
   - `text_accuracy_explanation`: Your brief analysis.
   - `text_accuracy`:
     - First, determine if "none" is appropriate (as per the general "When to Choose 'none'" protocol, especially if L is better on Accuracy but R on Recall, or vice-versa; or if performance is identical/text N/A).
     - If "none" is not chosen, select "L" if L is demonstrably superior overall in combined text accuracy and recall, or "R" if R is.
   - Respond with: {{"text_accuracy": "L/R/none", "text_accuracy_explanation": "Your analysis..."}}

4. Overall Preference:
   - Considering all above aspects (aesthetics, alignment, text accuracy) and any other factors relevant to the "Original Prompt".
   - `overall_preference_explanation`: Your brief analysis.
   - `overall_preference`: Choose "L", "R", or "none" (if L/R are equally preferred, a choice is impossible, or they present compelling but different and offsetting strengths across categories making neither holistically superior, as per the "When to Choose 'none'" protocol).
   - Respond with: {{"overall_preference": "L/R/none", "overall_preference_explanation": "Your analysis..."}}
)PK";

constexpr const char* kPreferenceEvalFormat = R"PK(Respond ONLY with a single JSON object in the following format:
{
  "aesthetic_value": "your_choice_for_aesthetic",
  "aesthetic_value_explanation": "Your brief analysis for aesthetics...",
  "prompt_alignment": "your_choice_for_alignment",
  "prompt_alignment_explanation": "Your brief analysis for prompt alignment...",
  "text_accuracy": "your_choice_for_text",
  "text_accuracy_explanation": "Your brief analysis for text accuracy...",
  "overall_preference": "your_choice_for_overall",
  "overall_preference_explanation": "Your brief analysis for overall preference..."
}
Replace placeholders with your choices ("L", "R", "none") and analyses.

Strict constraints:
- Only output the JSON object.
- No additional text or markdown.
- Each choice value (e.g., "aesthetic_value") must be "L", "R", or "none".
- Explanation fields must contain your textual analysis.
)PK";

struct TemplateDef {
  const char* id;
  const char* text;
  std::vector<TemplateSlot> slots;
};

const std::vector<TemplateDef>& template_defs() {
  static const std::vector<TemplateDef> defs = {
      {"mllm_scorer", kMllmScorer, {}},
      {"gemini_caption", kGeminiCaption, {}},
      {"gemini_mask", kGeminiMask, {}},
      {"alignment_eval", kAlignmentEval, {{"original_prompt", "{original_prompt_text}"}}},
      {"best_of_six", kBestOfSix, {{"original_prompt", "{`original_prompt`}"}}},
      {"feedback_collection", kFeedbackCollection, {}},
      {"ocr_eval", kOcrEval, {{"original_prompt", "`original_prompt_text`"}}},
      {"preference_eval", kPreferenceEval, {{"original_prompt", "{`original_prompt`}"}}},
      {"preference_eval_format", kPreferenceEvalFormat, {}},
  };
  return defs;
}

}  // namespace

const TemplateCatalog& TemplateCatalog::builtin() {
  static const TemplateCatalog catalog = [] {
    TemplateCatalog c;
    for (const TemplateDef& def : template_defs()) {
      c.templates_[def.id] = PromptTemplate{def.id, def.text, def.slots};
    }
    return c;
  }();
  return catalog;
}

TemplateCatalog TemplateCatalog::load(const std::filesystem::path& dir) {
  TemplateCatalog catalog;
  for (const TemplateDef& def : template_defs()) {
    const std::filesystem::path file = dir / (std::string(def.id) + ".txt");
    catalog.templates_[def.id] = PromptTemplate{def.id, read_file(file), def.slots};
  }
  return catalog;
}

const std::vector<std::string>& TemplateCatalog::known_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const TemplateDef& def : template_defs()) {
      v.push_back(def.id);
    }
    return v;
  }();
  return ids;
}

const PromptTemplate& TemplateCatalog::get(const std::string& id) const {
  auto it = templates_.find(id);
  if (it == templates_.end()) {
    throw ConfigError("unknown prompt template: " + id);
  }
  return it->second;
}

bool TemplateCatalog::contains(const std::string& id) const {
  return templates_.find(id) != templates_.end();
}

std::string render_template(const PromptTemplate& tpl,
                            const std::map<std::string, std::string>& args) {
  for (const TemplateSlot& slot : tpl.slots) {
    if (args.find(slot.name) == args.end()) {
      throw ConfigError("template " + tpl.id + ": missing argument '" + slot.name + "'");
    }
  }
  for (const auto& [name, value] : args) {
    (void)value;
    bool known = false;
    for (const TemplateSlot& slot : tpl.slots) {
      known = known || slot.name == name;
    }
    if (!known) {
      throw ConfigError("template " + tpl.id + ": unknown argument '" + name + "'");
    }
  }

  const std::string& text = tpl.text;
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const TemplateSlot& slot : tpl.slots) {
      if (text.compare(i, slot.literal.size(), slot.literal) == 0) {
        out += args.at(slot.name);
        i += slot.literal.size();
        replaced = true;
        break;
      }
    }
    if (replaced) {
      continue;
    }
    const char ch = text[i];
    if ((ch == '{' || ch == '}') && i + 1 < text.size() && text[i + 1] == ch) {
      out += ch;
      i += 2;
      continue;
    }
    out += ch;
    ++i;
  }
  return out;
}

}  // namespace posterkit::pipeline
