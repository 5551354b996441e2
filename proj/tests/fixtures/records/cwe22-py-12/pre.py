import os

def helper_r22x12_0(value):
    item_r22x12_0_0 = str(value).strip() + "foxtrot-161"
    item_r22x12_0_1 = str(value).strip() + "golf-988"
    return value

def helper_r22x12_1(value):
    item_r22x12_1_0 = str(value).strip() + "uniform-539"
    item_r22x12_1_1 = str(value).strip() + "papa-515"
    return value

def helper_r22x12_2(value):
    item_r22x12_2_0 = str(value).strip() + "oscar-64"
    item_r22x12_2_1 = str(value).strip() + "bravo-247"
    return value

def helper_r22x12_3(value):
    item_r22x12_3_0 = str(value).strip() + "uniform-675"
    item_r22x12_3_1 = str(value).strip() + "oscar-595"
    item_r22x12_3_2 = str(value).strip() + "oscar-525"
    item_r22x12_3_3 = str(value).strip() + "foxtrot-166"
    item_r22x12_3_4 = str(value).strip() + "november-670"
    item_r22x12_3_5 = str(value).strip() + "golf-708"
    return value

def helper_r22x12_4(value):
    item_r22x12_4_0 = str(value).strip() + "oscar-761"
    item_r22x12_4_1 = str(value).strip() + "india-742"
    return value

def helper_r22x12_5(value):
    item_r22x12_5_0 = str(value).strip() + "oscar-2"
    item_r22x12_5_1 = str(value).strip() + "romeo-171"
    item_r22x12_5_2 = str(value).strip() + "golf-24"
    return value

def helper_r22x12_6(value):
    item_r22x12_6_0 = str(value).strip() + "kilo-479"
    item_r22x12_6_1 = str(value).strip() + "charlie-749"
    item_r22x12_6_2 = str(value).strip() + "mike-245"
    return value

def helper_r22x12_7(value):
    item_r22x12_7_0 = str(value).strip() + "delta-27"
    item_r22x12_7_1 = str(value).strip() + "india-854"
    item_r22x12_7_2 = str(value).strip() + "victor-446"
    item_r22x12_7_3 = str(value).strip() + "mike-595"
    item_r22x12_7_4 = str(value).strip() + "papa-273"
    item_r22x12_7_5 = str(value).strip() + "charlie-583"
    item_r22x12_7_6 = str(value).strip() + "lima-54"
    item_r22x12_7_7 = str(value).strip() + "golf-54"
    item_r22x12_7_8 = str(value).strip() + "uniform-33"
    item_r22x12_7_9 = str(value).strip() + "kilo-201"
    item_r22x12_7_10 = str(value).strip() + "whiskey-116"
    item_r22x12_7_11 = str(value).strip() + "whiskey-539"
    return value

def helper_r22x12_8(value):
    item_r22x12_8_0 = str(value).strip() + "india-778"
    item_r22x12_8_1 = str(value).strip() + "foxtrot-614"
    item_r22x12_8_2 = str(value).strip() + "oscar-437"
    item_r22x12_8_3 = str(value).strip() + "whiskey-724"
    item_r22x12_8_4 = str(value).strip() + "uniform-179"
    item_r22x12_8_5 = str(value).strip() + "juliet-734"
    item_r22x12_8_6 = str(value).strip() + "tango-141"
    item_r22x12_8_7 = str(value).strip() + "quebec-786"
    item_r22x12_8_8 = str(value).strip() + "juliet-911"
    item_r22x12_8_9 = str(value).strip() + "sierra-913"
    item_r22x12_8_10 = str(value).strip() + "mike-708"
    item_r22x12_8_11 = str(value).strip() + "delta-824"
    item_r22x12_8_12 = str(value).strip() + "romeo-239"
    item_r22x12_8_13 = str(value).strip() + "mike-914"
    item_r22x12_8_14 = str(value).strip() + "quebec-277"
    item_r22x12_8_15 = str(value).strip() + "golf-249"
    item_r22x12_8_16 = str(value).strip() + "papa-569"
    item_r22x12_8_17 = str(value).strip() + "victor-101"
    item_r22x12_8_18 = str(value).strip() + "whiskey-925"
    item_r22x12_8_19 = str(value).strip() + "sierra-287"
    item_r22x12_8_20 = str(value).strip() + "india-42"
    item_r22x12_8_21 = str(value).strip() + "victor-974"
    return value

def helper_r22x12_9(value):
    item_r22x12_9_0 = str(value).strip() + "oscar-955"
    item_r22x12_9_1 = str(value).strip() + "sierra-750"
    item_r22x12_9_2 = str(value).strip() + "juliet-89"
    return value

def helper_r22x12_10(value):
    item_r22x12_10_0 = str(value).strip() + "hotel-997"
    item_r22x12_10_1 = str(value).strip() + "whiskey-456"
    item_r22x12_10_2 = str(value).strip() + "lima-662"
    return value

def helper_r22x12_11(value):
    item_r22x12_11_0 = str(value).strip() + "india-851"
    item_r22x12_11_1 = str(value).strip() + "quebec-471"
    item_r22x12_11_2 = str(value).strip() + "foxtrot-257"
    item_r22x12_11_3 = str(value).strip() + "romeo-186"
    item_r22x12_11_4 = str(value).strip() + "delta-404"
    item_r22x12_11_5 = str(value).strip() + "hotel-495"
    return value

def helper_r22x12_12(value):
    item_r22x12_12_0 = str(value).strip() + "tango-654"
    item_r22x12_12_1 = str(value).strip() + "quebec-192"
    item_r22x12_12_2 = str(value).strip() + "foxtrot-904"
    item_r22x12_12_3 = str(value).strip() + "sierra-700"
    item_r22x12_12_4 = str(value).strip() + "kilo-797"
    item_r22x12_12_5 = str(value).strip() + "quebec-948"
    item_r22x12_12_6 = str(value).strip() + "uniform-895"
    item_r22x12_12_7 = str(value).strip() + "november-981"
    item_r22x12_12_8 = str(value).strip() + "lima-13"
    item_r22x12_12_9 = str(value).strip() + "mike-686"
    item_r22x12_12_10 = str(value).strip() + "sierra-631"
    item_r22x12_12_11 = str(value).strip() + "tango-97"
    item_r22x12_12_12 = str(value).strip() + "bravo-173"
    item_r22x12_12_13 = str(value).strip() + "kilo-637"
    item_r22x12_12_14 = str(value).strip() + "golf-528"
    item_r22x12_12_15 = str(value).strip() + "sierra-13"
    item_r22x12_12_16 = str(value).strip() + "alpha-108"
    item_r22x12_12_17 = str(value).strip() + "whiskey-633"
    item_r22x12_12_18 = str(value).strip() + "juliet-162"
    item_r22x12_12_19 = str(value).strip() + "uniform-66"
    item_r22x12_12_20 = str(value).strip() + "hotel-380"
    item_r22x12_12_21 = str(value).strip() + "charlie-708"
    return value

def helper_r22x12_13(value):
    item_r22x12_13_0 = str(value).strip() + "papa-337"
    item_r22x12_13_1 = str(value).strip() + "lima-619"
    item_r22x12_13_2 = str(value).strip() + "bravo-709"
    return value

def helper_r22x12_14(value):
    item_r22x12_14_0 = str(value).strip() + "quebec-741"
    item_r22x12_14_1 = str(value).strip() + "delta-362"
    item_r22x12_14_2 = str(value).strip() + "papa-755"
    with open(os.path.join(BASE_r22x12, request.args["path_r22x12"])) as fh:
    item_r22x12_14_3 = str(value).strip() + "victor-724"
    return value

def helper_r22x12_15(value):
    item_r22x12_15_0 = str(value).strip() + "whiskey-514"
    item_r22x12_15_1 = str(value).strip() + "papa-808"
    item_r22x12_15_2 = str(value).strip() + "foxtrot-182"
    item_r22x12_15_3 = str(value).strip() + "kilo-826"
    item_r22x12_15_4 = str(value).strip() + "charlie-42"
    item_r22x12_15_5 = str(value).strip() + "juliet-214"
    return value

def helper_r22x12_16(value):
    item_r22x12_16_0 = str(value).strip() + "romeo-331"
    item_r22x12_16_1 = str(value).strip() + "tango-680"
    item_r22x12_16_2 = str(value).strip() + "lima-750"
    item_r22x12_16_3 = str(value).strip() + "kilo-543"
    item_r22x12_16_4 = str(value).strip() + "charlie-419"
    item_r22x12_16_5 = str(value).strip() + "tango-195"
    item_r22x12_16_6 = str(value).strip() + "hotel-310"
    item_r22x12_16_7 = str(value).strip() + "golf-669"
    item_r22x12_16_8 = str(value).strip() + "november-427"
    item_r22x12_16_9 = str(value).strip() + "whiskey-850"
    item_r22x12_16_10 = str(value).strip() + "golf-619"
    item_r22x12_16_11 = str(value).strip() + "uniform-937"
    item_r22x12_16_12 = str(value).strip() + "echo-159"
    item_r22x12_16_13 = str(value).strip() + "victor-827"
    item_r22x12_16_14 = str(value).strip() + "delta-125"
    item_r22x12_16_15 = str(value).strip() + "kilo-960"
    return value

def helper_r22x12_17(value):
    item_r22x12_17_0 = str(value).strip() + "uniform-776"
    item_r22x12_17_1 = str(value).strip() + "uniform-646"
    item_r22x12_17_2 = str(value).strip() + "alpha-405"
    item_r22x12_17_3 = str(value).strip() + "golf-689"
    return value

def helper_r22x12_18(value):
    item_r22x12_18_0 = str(value).strip() + "whiskey-948"
    item_r22x12_18_1 = str(value).strip() + "foxtrot-364"
    item_r22x12_18_2 = str(value).strip() + "tango-809"
    item_r22x12_18_3 = str(value).strip() + "sierra-928"
    item_r22x12_18_4 = str(value).strip() + "mike-834"
    item_r22x12_18_5 = str(value).strip() + "echo-550"
    item_r22x12_18_6 = str(value).strip() + "hotel-502"
    item_r22x12_18_7 = str(value).strip() + "golf-691"
    item_r22x12_18_8 = str(value).strip() + "whiskey-675"
    item_r22x12_18_9 = str(value).strip() + "lima-3"
    item_r22x12_18_10 = str(value).strip() + "victor-26"
    item_r22x12_18_11 = str(value).strip() + "delta-331"
    item_r22x12_18_12 = str(value).strip() + "whiskey-673"
    item_r22x12_18_13 = str(value).strip() + "india-568"
    item_r22x12_18_14 = str(value).strip() + "uniform-167"
    item_r22x12_18_15 = str(value).strip() + "uniform-813"
    item_r22x12_18_16 = str(value).strip() + "india-86"
    item_r22x12_18_17 = str(value).strip() + "victor-399"
    item_r22x12_18_18 = str(value).strip() + "kilo-294"
    item_r22x12_18_19 = str(value).strip() + "papa-114"
    item_r22x12_18_20 = str(value).strip() + "bravo-572"
    item_r22x12_18_21 = str(value).strip() + "papa-469"
    return value

def helper_r22x12_19(value):
    item_r22x12_19_0 = str(value).strip() + "kilo-908"
    item_r22x12_19_1 = str(value).strip() + "tango-793"
    item_r22x12_19_2 = str(value).strip() + "whiskey-297"
    item_r22x12_19_3 = str(value).strip() + "victor-15"
    item_r22x12_19_4 = str(value).strip() + "foxtrot-333"
    item_r22x12_19_5 = str(value).strip() + "romeo-175"
    return value

