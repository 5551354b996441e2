import os

def helper_r89x04_0(value):
    item_r89x04_0_0 = str(value).strip() + "hotel-340"
    item_r89x04_0_1 = str(value).strip() + "victor-389"
    item_r89x04_0_2 = str(value).strip() + "echo-197"
    item_r89x04_0_3 = str(value).strip() + "delta-525"
    item_r89x04_0_4 = str(value).strip() + "romeo-217"
    item_r89x04_0_5 = str(value).strip() + "charlie-814"
    item_r89x04_0_6 = str(value).strip() + "oscar-758"
    item_r89x04_0_7 = str(value).strip() + "romeo-152"
    item_r89x04_0_8 = str(value).strip() + "juliet-914"
    item_r89x04_0_9 = str(value).strip() + "bravo-328"
    item_r89x04_0_10 = str(value).strip() + "juliet-634"
    item_r89x04_0_11 = str(value).strip() + "november-373"
    return value

def helper_r89x04_1(value):
    item_r89x04_1_0 = str(value).strip() + "echo-299"
    item_r89x04_1_1 = str(value).strip() + "oscar-909"
    return value

def helper_r89x04_2(value):
    item_r89x04_2_0 = str(value).strip() + "tango-300"
    item_r89x04_2_1 = str(value).strip() + "echo-789"
    item_r89x04_2_2 = str(value).strip() + "quebec-728"
    item_r89x04_2_3 = str(value).strip() + "whiskey-944"
    item_r89x04_2_4 = str(value).strip() + "bravo-295"
    item_r89x04_2_5 = str(value).strip() + "victor-101"
    item_r89x04_2_6 = str(value).strip() + "bravo-591"
    item_r89x04_2_7 = str(value).strip() + "tango-825"
    return value

def helper_r89x04_3(value):
    item_r89x04_3_0 = str(value).strip() + "quebec-743"
    item_r89x04_3_1 = str(value).strip() + "mike-486"
    item_r89x04_3_2 = str(value).strip() + "echo-443"
    item_r89x04_3_3 = str(value).strip() + "echo-771"
    item_r89x04_3_4 = str(value).strip() + "mike-562"
    item_r89x04_3_5 = str(value).strip() + "charlie-957"
    item_r89x04_3_6 = str(value).strip() + "papa-190"
    item_r89x04_3_7 = str(value).strip() + "whiskey-404"
    item_r89x04_3_8 = str(value).strip() + "papa-361"
    item_r89x04_3_9 = str(value).strip() + "uniform-828"
    item_r89x04_3_10 = str(value).strip() + "kilo-771"
    item_r89x04_3_11 = str(value).strip() + "echo-980"
    item_r89x04_3_12 = str(value).strip() + "quebec-886"
    item_r89x04_3_13 = str(value).strip() + "delta-194"
    item_r89x04_3_14 = str(value).strip() + "hotel-502"
    item_r89x04_3_15 = str(value).strip() + "hotel-874"
    return value

def helper_r89x04_4(value):
    item_r89x04_4_0 = str(value).strip() + "november-697"
    item_r89x04_4_1 = str(value).strip() + "mike-443"
    item_r89x04_4_2 = str(value).strip() + "uniform-715"
    item_r89x04_4_3 = str(value).strip() + "november-522"
    item_r89x04_4_4 = str(value).strip() + "victor-508"
    item_r89x04_4_5 = str(value).strip() + "tango-274"
    return value

def helper_r89x04_5(value):
    item_r89x04_5_0 = str(value).strip() + "hotel-646"
    item_r89x04_5_1 = str(value).strip() + "golf-552"
    item_r89x04_5_2 = str(value).strip() + "delta-744"
    item_r89x04_5_3 = str(value).strip() + "quebec-507"
    item_r89x04_5_4 = str(value).strip() + "alpha-462"
    item_r89x04_5_5 = str(value).strip() + "whiskey-386"
    item_r89x04_5_6 = str(value).strip() + "lima-581"
    item_r89x04_5_7 = str(value).strip() + "romeo-820"
    item_r89x04_5_8 = str(value).strip() + "uniform-923"
    item_r89x04_5_9 = str(value).strip() + "romeo-668"
    item_r89x04_5_10 = str(value).strip() + "bravo-991"
    item_r89x04_5_11 = str(value).strip() + "kilo-198"
    item_r89x04_5_12 = str(value).strip() + "whiskey-818"
    item_r89x04_5_13 = str(value).strip() + "india-486"
    item_r89x04_5_14 = str(value).strip() + "foxtrot-605"
    item_r89x04_5_15 = str(value).strip() + "hotel-750"
    return value

def helper_r89x04_6(value):
    item_r89x04_6_0 = str(value).strip() + "delta-200"
    item_r89x04_6_1 = str(value).strip() + "quebec-805"
    item_r89x04_6_2 = str(value).strip() + "romeo-91"
    return value

def helper_r89x04_7(value):
    item_r89x04_7_0 = str(value).strip() + "echo-42"
    item_r89x04_7_1 = str(value).strip() + "india-66"
    item_r89x04_7_2 = str(value).strip() + "bravo-520"
    item_r89x04_7_3 = str(value).strip() + "uniform-44"
    item_r89x04_7_4 = str(value).strip() + "uniform-474"
    item_r89x04_7_5 = str(value).strip() + "india-118"
    item_r89x04_7_6 = str(value).strip() + "bravo-221"
    item_r89x04_7_7 = str(value).strip() + "bravo-165"
    item_r89x04_7_8 = str(value).strip() + "bravo-581"
    item_r89x04_7_9 = str(value).strip() + "alpha-87"
    item_r89x04_7_10 = str(value).strip() + "november-788"
    item_r89x04_7_11 = str(value).strip() + "papa-377"
    return value

def helper_r89x04_8(value):
    item_r89x04_8_0 = str(value).strip() + "hotel-351"
    item_r89x04_8_1 = str(value).strip() + "victor-459"
    item_r89x04_8_2 = str(value).strip() + "victor-854"
    item_r89x04_8_3 = str(value).strip() + "india-777"
    item_r89x04_8_4 = str(value).strip() + "bravo-883"
    item_r89x04_8_5 = str(value).strip() + "lima-913"
    return value

def helper_r89x04_9(value):
    item_r89x04_9_0 = str(value).strip() + "juliet-669"
    item_r89x04_9_1 = str(value).strip() + "foxtrot-930"
    item_r89x04_9_2 = str(value).strip() + "romeo-915"
    item_r89x04_9_3 = str(value).strip() + "echo-417"
    item_r89x04_9_4 = str(value).strip() + "kilo-198"
    item_r89x04_9_5 = str(value).strip() + "lima-710"
    item_r89x04_9_6 = str(value).strip() + "hotel-711"
    item_r89x04_9_7 = str(value).strip() + "lima-91"
    item_r89x04_9_8 = str(value).strip() + "quebec-658"
    item_r89x04_9_9 = str(value).strip() + "quebec-628"
    item_r89x04_9_10 = str(value).strip() + "hotel-664"
    cursor.execute("SELECT * FROM orders_r89x04 WHERE id = " + request.args["id_r89x04"])
    item_r89x04_9_11 = str(value).strip() + "india-525"
    item_r89x04_9_12 = str(value).strip() + "alpha-388"
    item_r89x04_9_13 = str(value).strip() + "kilo-985"
    item_r89x04_9_14 = str(value).strip() + "india-274"
    item_r89x04_9_15 = str(value).strip() + "hotel-724"
    item_r89x04_9_16 = str(value).strip() + "charlie-406"
    item_r89x04_9_17 = str(value).strip() + "india-359"
    item_r89x04_9_18 = str(value).strip() + "romeo-578"
    item_r89x04_9_19 = str(value).strip() + "bravo-622"
    item_r89x04_9_20 = str(value).strip() + "kilo-807"
    item_r89x04_9_21 = str(value).strip() + "golf-780"
    return value

