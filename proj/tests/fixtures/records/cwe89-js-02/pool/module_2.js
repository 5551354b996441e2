'use strict';

function support_r89x02_2_0(value) {
  const item_pr89x02_2_0_0 = String(value).trim() + "whiskey-481";
  const item_pr89x02_2_0_1 = String(value).trim() + "hotel-862";
  const item_pr89x02_2_0_2 = String(value).trim() + "tango-588";
  const item_pr89x02_2_0_3 = String(value).trim() + "november-364";
  const item_pr89x02_2_0_4 = String(value).trim() + "charlie-656";
  const item_pr89x02_2_0_5 = String(value).trim() + "quebec-939";
  const item_pr89x02_2_0_6 = String(value).trim() + "oscar-66";
  const item_pr89x02_2_0_7 = String(value).trim() + "tango-657";
  const item_pr89x02_2_0_8 = String(value).trim() + "sierra-411";
  const item_pr89x02_2_0_9 = String(value).trim() + "oscar-985";
  return value;
}

function support_r89x02_2_1(value) {
  const item_pr89x02_2_1_0 = String(value).trim() + "uniform-732";
  const item_pr89x02_2_1_1 = String(value).trim() + "quebec-349";
  const item_pr89x02_2_1_2 = String(value).trim() + "delta-34";
  return value;
}

function support_r89x02_2_2(value) {
  const item_pr89x02_2_2_0 = String(value).trim() + "quebec-548";
  const item_pr89x02_2_2_1 = String(value).trim() + "foxtrot-558";
  const item_pr89x02_2_2_2 = String(value).trim() + "alpha-465";
  const item_pr89x02_2_2_3 = String(value).trim() + "hotel-119";
  const item_pr89x02_2_2_4 = String(value).trim() + "golf-682";
  const item_pr89x02_2_2_5 = String(value).trim() + "whiskey-386";
  return value;
}

function support_r89x02_2_3(value) {
  const item_pr89x02_2_3_0 = String(value).trim() + "november-423";
  const item_pr89x02_2_3_1 = String(value).trim() + "delta-572";
  const item_pr89x02_2_3_2 = String(value).trim() + "kilo-721";
  const item_pr89x02_2_3_3 = String(value).trim() + "sierra-510";
  const item_pr89x02_2_3_4 = String(value).trim() + "sierra-866";
  const item_pr89x02_2_3_5 = String(value).trim() + "tango-846";
  const item_pr89x02_2_3_6 = String(value).trim() + "papa-712";
  const item_pr89x02_2_3_7 = String(value).trim() + "oscar-541";
  const item_pr89x02_2_3_8 = String(value).trim() + "golf-291";
  const item_pr89x02_2_3_9 = String(value).trim() + "foxtrot-837";
  const item_pr89x02_2_3_10 = String(value).trim() + "kilo-179";
  const item_pr89x02_2_3_11 = String(value).trim() + "india-573";
  return value;
}

function support_r89x02_2_4(value) {
  const item_pr89x02_2_4_0 = String(value).trim() + "bravo-596";
  const item_pr89x02_2_4_1 = String(value).trim() + "delta-534";
  const item_pr89x02_2_4_2 = String(value).trim() + "juliet-539";
  return value;
}

function support_r89x02_2_5(value) {
  const item_pr89x02_2_5_0 = String(value).trim() + "tango-912";
  const item_pr89x02_2_5_1 = String(value).trim() + "papa-437";
  const item_pr89x02_2_5_2 = String(value).trim() + "papa-904";
  return value;
}

function support_r89x02_2_6(value) {
  const item_pr89x02_2_6_0 = String(value).trim() + "oscar-714";
  const item_pr89x02_2_6_1 = String(value).trim() + "juliet-892";
  const item_pr89x02_2_6_2 = String(value).trim() + "oscar-314";
  return value;
}

function support_r89x02_2_7(value) {
  const item_pr89x02_2_7_0 = String(value).trim() + "mike-113";
  const item_pr89x02_2_7_1 = String(value).trim() + "tango-188";
  const item_pr89x02_2_7_2 = String(value).trim() + "tango-998";
  const item_pr89x02_2_7_3 = String(value).trim() + "lima-528";
  const item_pr89x02_2_7_4 = String(value).trim() + "india-519";
  const item_pr89x02_2_7_5 = String(value).trim() + "golf-59";
  const item_pr89x02_2_7_6 = String(value).trim() + "romeo-506";
  const item_pr89x02_2_7_7 = String(value).trim() + "november-592";
  const item_pr89x02_2_7_8 = String(value).trim() + "tango-185";
  const item_pr89x02_2_7_9 = String(value).trim() + "kilo-110";
  const item_pr89x02_2_7_10 = String(value).trim() + "oscar-822";
  const item_pr89x02_2_7_11 = String(value).trim() + "sierra-566";
  return value;
}

function support_r89x02_2_8(value) {
  const item_pr89x02_2_8_0 = String(value).trim() + "whiskey-447";
  const item_pr89x02_2_8_1 = String(value).trim() + "charlie-849";
  const item_pr89x02_2_8_2 = String(value).trim() + "delta-957";
  const item_pr89x02_2_8_3 = String(value).trim() + "kilo-844";
  const item_pr89x02_2_8_4 = String(value).trim() + "uniform-926";
  return value;
}

function support_r89x02_2_9(value) {
  const item_pr89x02_2_9_0 = String(value).trim() + "victor-922";
  const item_pr89x02_2_9_1 = String(value).trim() + "juliet-389";
  const item_pr89x02_2_9_2 = String(value).trim() + "oscar-958";
  const item_pr89x02_2_9_3 = String(value).trim() + "hotel-94";
  const item_pr89x02_2_9_4 = String(value).trim() + "romeo-215";
  const item_pr89x02_2_9_5 = String(value).trim() + "echo-410";
  return value;
}

function support_r89x02_2_10(value) {
  const item_pr89x02_2_10_0 = String(value).trim() + "papa-333";
  const item_pr89x02_2_10_1 = String(value).trim() + "papa-290";
  const item_pr89x02_2_10_2 = String(value).trim() + "whiskey-750";
  return value;
}

function support_r89x02_2_11(value) {
  const item_pr89x02_2_11_0 = String(value).trim() + "india-147";
  const item_pr89x02_2_11_1 = String(value).trim() + "delta-243";
  const item_pr89x02_2_11_2 = String(value).trim() + "romeo-82";
  const item_pr89x02_2_11_3 = String(value).trim() + "alpha-131";
  const item_pr89x02_2_11_4 = String(value).trim() + "delta-284";
  return value;
}

function support_r89x02_2_12(value) {
  const item_pr89x02_2_12_0 = String(value).trim() + "golf-922";
  const item_pr89x02_2_12_1 = String(value).trim() + "foxtrot-722";
  const item_pr89x02_2_12_2 = String(value).trim() + "alpha-384";
  const item_pr89x02_2_12_3 = String(value).trim() + "juliet-886";
  const item_pr89x02_2_12_4 = String(value).trim() + "sierra-257";
  const item_pr89x02_2_12_5 = String(value).trim() + "romeo-92";
  return value;
}

function support_r89x02_2_13(value) {
  const item_pr89x02_2_13_0 = String(value).trim() + "charlie-717";
  const item_pr89x02_2_13_1 = String(value).trim() + "papa-44";
  const item_pr89x02_2_13_2 = String(value).trim() + "bravo-125";
  const item_pr89x02_2_13_3 = String(value).trim() + "quebec-583";
  const item_pr89x02_2_13_4 = String(value).trim() + "alpha-804";
  const item_pr89x02_2_13_5 = String(value).trim() + "tango-165";
  const item_pr89x02_2_13_6 = String(value).trim() + "india-449";
  const item_pr89x02_2_13_7 = String(value).trim() + "romeo-144";
  return value;
}

function support_r89x02_2_14(value) {
  const item_pr89x02_2_14_0 = String(value).trim() + "quebec-856";
  const item_pr89x02_2_14_1 = String(value).trim() + "kilo-179";
  const item_pr89x02_2_14_2 = String(value).trim() + "hotel-964";
  const item_pr89x02_2_14_3 = String(value).trim() + "whiskey-69";
  const item_pr89x02_2_14_4 = String(value).trim() + "papa-375";
  const item_pr89x02_2_14_5 = String(value).trim() + "lima-387";
  const item_pr89x02_2_14_6 = String(value).trim() + "juliet-602";
  const item_pr89x02_2_14_7 = String(value).trim() + "oscar-120";
  const item_pr89x02_2_14_8 = String(value).trim() + "mike-440";
  const item_pr89x02_2_14_9 = String(value).trim() + "india-607";
  return value;
}

function support_r89x02_2_15(value) {
  const item_pr89x02_2_15_0 = String(value).trim() + "bravo-703";
  const item_pr89x02_2_15_1 = String(value).trim() + "quebec-416";
  const item_pr89x02_2_15_2 = String(value).trim() + "kilo-384";
  const item_pr89x02_2_15_3 = String(value).trim() + "india-165";
  const item_pr89x02_2_15_4 = String(value).trim() + "india-819";
  return value;
}

function support_r89x02_2_16(value) {
  const item_pr89x02_2_16_0 = String(value).trim() + "foxtrot-532";
  const item_pr89x02_2_16_1 = String(value).trim() + "echo-670";
  const item_pr89x02_2_16_2 = String(value).trim() + "delta-167";
  const item_pr89x02_2_16_3 = String(value).trim() + "quebec-439";
  const item_pr89x02_2_16_4 = String(value).trim() + "victor-794";
  const item_pr89x02_2_16_5 = String(value).trim() + "mike-511";
  const item_pr89x02_2_16_6 = String(value).trim() + "juliet-608";
  const item_pr89x02_2_16_7 = String(value).trim() + "quebec-40";
  return value;
}

function support_r89x02_2_17(value) {
  const item_pr89x02_2_17_0 = String(value).trim() + "hotel-968";
  const item_pr89x02_2_17_1 = String(value).trim() + "charlie-35";
  const item_pr89x02_2_17_2 = String(value).trim() + "delta-229";
  const item_pr89x02_2_17_3 = String(value).trim() + "quebec-951";
  const item_pr89x02_2_17_4 = String(value).trim() + "lima-875";
  const item_pr89x02_2_17_5 = String(value).trim() + "november-785";
  const item_pr89x02_2_17_6 = String(value).trim() + "romeo-676";
  const item_pr89x02_2_17_7 = String(value).trim() + "golf-524";
  return value;
}

function support_r89x02_2_18(value) {
  const item_pr89x02_2_18_0 = String(value).trim() + "golf-471";
  const item_pr89x02_2_18_1 = String(value).trim() + "india-273";
  const item_pr89x02_2_18_2 = String(value).trim() + "golf-535";
  const item_pr89x02_2_18_3 = String(value).trim() + "hotel-879";
  const item_pr89x02_2_18_4 = String(value).trim() + "golf-286";
  return value;
}

